#include "qhd/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhd {

AdmissibleOrder AdmissibleOrder::make(const Quiver& q, OrderKind kind,
                                      std::vector<arrow_id> precedence) {
  auto live = q.live_arrows();
  std::vector<bool> seen(q.arrow_count(), false);
  for (arrow_id a : precedence) {
    if (a < 0 || a >= q.arrow_count() || !q.arrow_live(a))
      throw std::invalid_argument("precedence names a dead arrow");
    if (seen[a]) throw std::invalid_argument("duplicate precedence entry");
    seen[a] = true;
  }
  if (precedence.size() != live.size())
    throw std::invalid_argument("precedence must cover every arrow");
  AdmissibleOrder ord;
  ord.kind_ = kind;
  ord.rank_.assign(q.arrow_count(), -1);
  for (size_t i = 0; i < precedence.size(); ++i)
    ord.rank_[precedence[i]] = static_cast<int>(i);
  ord.precedence_ = std::move(precedence);
  return ord;
}

AdmissibleOrder AdmissibleOrder::declaration(const Quiver& q, OrderKind kind) {
  return make(q, kind, q.live_arrows());
}

AdmissibleOrder AdmissibleOrder::reversed() const {
  AdmissibleOrder ord = *this;
  std::reverse(ord.precedence_.begin(), ord.precedence_.end());
  for (size_t i = 0; i < ord.precedence_.size(); ++i)
    ord.rank_[ord.precedence_[i]] = static_cast<int>(i);
  return ord;
}

std::strong_ordering AdmissibleOrder::compare(const Path& p,
                                              const Path& q) const {
  if (auto c = p.length() <=> q.length(); c != 0) return c;
  if (p.trivial()) return p.base <=> q.base;
  int n = p.length();
  for (int i = 0; i < n; ++i) {
    int j = kind_ == OrderKind::lenlex_left ? i : n - 1 - i;
    // lower rank = higher precedence = greater path
    if (auto c = rank_[q.arrows[j]] <=> rank_[p.arrows[j]]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string AdmissibleOrder::to_string(const Quiver& q) const {
  std::string out =
      kind_ == OrderKind::lenlex_left ? "lenlex " : "lenlex-right ";
  for (size_t i = 0; i < precedence_.size(); ++i) {
    if (i) out += " > ";
    out += q.arrow_name(precedence_[i]);
  }
  return out;
}

std::vector<Path> paths_up_to_length(const Quiver& q, int d,
                                     const AdmissibleOrder& ord) {
  auto out = all_paths_up_to_length(q, d);
  std::sort(out.begin(), out.end(),
            [&](const Path& a, const Path& b) { return ord.less(a, b); });
  return out;
}

}  // namespace qhd
