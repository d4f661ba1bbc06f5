#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qhd/quiver.hpp"

namespace qhd {

enum class OrderKind { lenlex_left, lenlex_right };

// Length-lexicographic admissible order on paths. Shorter paths come first,
// trivial paths sort below everything of positive length and among
// themselves by vertex id; equal-length words are compared letterwise by
// arrow precedence, left to right or right to left depending on the kind.
class AdmissibleOrder {
 public:
  // precedence: arrow ids from largest to smallest, covering every live
  // arrow exactly once.
  static AdmissibleOrder make(const Quiver& q, OrderKind kind,
                              std::vector<arrow_id> precedence);
  static AdmissibleOrder declaration(const Quiver& q,
                                     OrderKind kind = OrderKind::lenlex_left);

  AdmissibleOrder reversed() const;

  std::strong_ordering compare(const Path& p, const Path& q) const;
  bool less(const Path& p, const Path& q) const { return compare(p, q) < 0; }
  bool greater(const Path& p, const Path& q) const { return compare(p, q) > 0; }

  OrderKind kind() const { return kind_; }
  const std::vector<arrow_id>& precedence() const { return precedence_; }
  std::string to_string(const Quiver& q) const;

 private:
  OrderKind kind_ = OrderKind::lenlex_left;
  std::vector<arrow_id> precedence_;
  std::vector<int> rank_;  // rank_[arrow] = position in precedence_, 0 = top
};

// All live paths of length <= d, sorted ascending under ord.
std::vector<Path> paths_up_to_length(const Quiver& q, int d,
                                     const AdmissibleOrder& ord);

}  // namespace qhd
