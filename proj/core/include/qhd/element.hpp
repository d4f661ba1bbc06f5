#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhd/field.hpp"
#include "qhd/order.hpp"
#include "qhd/quiver.hpp"

namespace qhd {

// An element of the path algebra KQ: finitely many paths with nonzero
// coefficients. Terms are kept sorted by the structural path order with no
// zero coefficients stored, so equality is plain memberwise comparison.
template <Field K>
class Element {
 public:
  using Term = std::pair<Path, K>;

  Element() = default;
  static Element path(const Path& p, K c = K::one()) {
    Element x;
    if (!c.is_zero()) x.terms_.push_back({p, std::move(c)});
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  const K* coefficient(const Path& p) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), p,
        [](const Term& t, const Path& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) return &it->second;
    return nullptr;
  }

  void add_term(const Path& p, const K& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), p,
        [](const Term& t, const Path& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, {p, c});
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  Element& operator*=(const K& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(K c, Element a) { return a *= c; }
  Element operator-() const {
    Element x = *this;
    for (auto& t : x.terms_) t.second = -t.second;
    return x;
  }
  friend bool operator==(const Element&, const Element&) = default;

  // Two-sided multiplication by paths; terms with non-composable paths drop
  // out, which is exactly the v·x·w contraction used by uniformize.
  Element framed(const Quiver& q, const Path& left, const Path& right) const {
    Element out;
    for (const auto& [p, c] : terms_)
      if (auto lp = compose(q, left, p))
        if (auto lpr = compose(q, *lp, right)) out.add_term(*lpr, c);
    return out;
  }

 private:
  std::vector<Term> terms_;
};

template <Field K>
struct UniformElement {
  Element<K> element;
  vertex_id origin = -1;
  vertex_id end = -1;
};

template <Field K>
bool is_uniform(const Quiver& q, const Element<K>& x, vertex_id o,
                vertex_id e) {
  for (const auto& [p, c] : x.terms())
    if (origin(q, p) != o || end(q, p) != e) return false;
  return true;
}

// The nonzero components uxv over all vertex pairs; they sum back to x.
template <Field K>
std::vector<UniformElement<K>> uniformize(const Quiver& q,
                                          const Element<K>& x) {
  std::map<std::pair<vertex_id, vertex_id>, Element<K>> grouped;
  for (const auto& [p, c] : x.terms())
    grouped[{origin(q, p), end(q, p)}].add_term(p, c);
  std::vector<UniformElement<K>> out;
  for (auto& [oe, el] : grouped)
    out.push_back({std::move(el), oe.first, oe.second});
  return out;
}

// x = x_hat + x_e with x_hat the terms whose paths avoid S entirely
// (endpoints included) and x_e the rest.
template <Field K>
std::pair<Element<K>, Element<K>> split_e(const Quiver& q, const Element<K>& x,
                                          const VertexSet& s) {
  Element<K> hat, e;
  for (const auto& [p, c] : x.terms())
    (visits_any(q, p, s) ? e : hat).add_term(p, c);
  return {hat, e};
}

template <Field K>
std::vector<Element<K>> restrict_set(const Quiver& q,
                                     const std::vector<Element<K>>& xs,
                                     const VertexSet& s) {
  std::vector<Element<K>> out;
  for (const auto& x : xs) {
    auto hat = split_e(q, x, s).first;
    if (!hat.is_zero()) out.push_back(std::move(hat));
  }
  return out;
}

template <Field K>
std::string element_to_string(const Quiver& q, const Element<K>& x,
                              const AdmissibleOrder& ord) {
  if (x.is_zero()) return "0";
  auto ts = x.terms();
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.first, b.first);
  });
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    K c = ts[i].second;
    bool neg = c.str().starts_with('-');
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = c.str();
    if (neg) mag.erase(0, 1);
    if (mag != "1") out += mag + " ";
    out += path_to_string(q, ts[i].first);
  }
  return out;
}

}  // namespace qhd
