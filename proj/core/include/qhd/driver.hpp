#pragma once

#include <optional>
#include <string>

#include "qhd/presentation.hpp"
#include "qhd/report.hpp"

namespace qhd {

struct Options {
  std::string command;  // gb | dim | qh | verify | quotient
  bool monomial = false;
  bool json = false;
  std::string field = "q";  // "q" or "fp:<prime>"
  std::optional<int> cap;
  std::optional<std::string> order_spec;    // --order "lenlex a > b"
  std::optional<std::string> orders_spec;   // --orders "spec; spec"
  std::optional<std::string> ordering_csv;  // verify: "v3,v1,..."
  std::optional<std::string> remove_csv;    // quotient: "v3" or "v3,v5"
};

// Executes one command against a parsed presentation. Throws the qhd error
// types (and std::domain_error from field setup) on input problems; the
// binary maps those to exit code 3.
RunReport run_command(const Options& opts, const Presentation& pres);

// --cap beats QHD_CAP beats 2*(longest relation term) + vertex count.
int resolve_cap(const Options& opts, const Presentation& pres);

}  // namespace qhd
