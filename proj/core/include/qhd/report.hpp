#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qhd {

struct StepReport {
  std::string vertex;
  int ideal_dim = 0;
  int tensor_dim = -1;  // negative: criterion not applicable
  int quotient_dim = -1;
  bool l2 = false;
  bool ljl = false;
  bool proj = false;
};

struct GbReport {
  std::vector<std::string> basis;
  std::vector<std::string> tips;
  int dim = -1;
  int length_bound = -1;
};

// Field-independent result of one command. The JSON schema is fixed:
// {verdict, ordering, steps, gb, order_used}; absent parts serialize as
// null. `lines` carries human-readable extras (details, quotient text).
struct RunReport {
  std::optional<std::string> verdict;
  std::optional<std::vector<std::string>> ordering;
  std::optional<std::vector<StepReport>> steps;
  std::optional<GbReport> gb;
  std::optional<std::string> order_used;
  std::vector<std::string> lines;
  int exit_code = 0;
};

std::string emit_json(const RunReport& r);
std::string emit_text(const RunReport& r);

}  // namespace qhd
