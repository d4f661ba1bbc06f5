#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhd/decide.hpp"
#include "qhd/driver.hpp"
#include "qhd/presentation.hpp"

namespace qhdtest {

using namespace qhd;

inline Presentation example1() {
  return parse_presentation(R"(vertices v1 v2 v3 v4 v5 v6
arrow a: v1 -> v2
arrow b: v2 -> v4
arrow c: v1 -> v3
arrow d: v3 -> v4
arrow e: v4 -> v6
arrow f: v3 -> v5
arrow g: v5 -> v6
arrow h: v6 -> v1
rel ab
rel be
rel de
rel eh
rel hc
)");
}

inline Presentation example2() {
  return parse_presentation(R"(vertices v1 v2 v3 v4
arrow a: v1 -> v2
arrow b: v2 -> v4
arrow c: v1 -> v3
arrow d: v3 -> v4
arrow e: v4 -> v1
rel a*b - c*d
rel b*e
rel e*a
order lenlex a > b > c > d > e
)");
}

inline Path word(const Quiver& q, const std::string& letters) {
  std::vector<arrow_id> ids;
  for (char c : letters) ids.push_back(*q.find_arrow(std::string(1, c)));
  return Path::of(q, ids);
}

inline Path vert(const Quiver& q, const std::string& name) {
  return Path::vertex(*q.find_vertex(name));
}

// Naive window scan, written independently of subpath_occurrences.
inline bool oracle_contains(const Quiver& q, const Path& t, const Path& p) {
  if (t.trivial()) {
    for (vertex_id v : visits(q, p))
      if (v == t.base) return true;
    return false;
  }
  if (t.length() > p.length()) return false;
  for (int i = 0; i + t.length() <= p.length(); ++i) {
    bool hit = true;
    for (int j = 0; j < t.length(); ++j)
      if (p.arrows[i + j] != t.arrows[j]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

// Length-by-length enumeration with the naive containment scan; independent
// of normal_basis's window logic. Normality is subpath-closed, so extending
// only the normal frontier loses nothing. Throws "runaway" when normal paths
// persist at hard_cap and "too wide" when the enumeration exceeds the width
// guard before that.
inline std::vector<Path> oracle_normal(const Quiver& q, const TipSet& t,
                                       int hard_cap = 64,
                                       size_t width_guard = 1u << 20) {
  auto normal = [&](const Path& p) {
    for (const Path& m : t.members)
      if (oracle_contains(q, m, p)) return false;
    return true;
  };
  std::vector<Path> out, frontier;
  for (vertex_id v : q.live_vertices()) {
    Path p = Path::vertex(v);
    if (normal(p)) frontier.push_back(p);
  }
  out = frontier;
  for (int d = 1; !frontier.empty(); ++d) {
    if (d > hard_cap) throw TooLarge("oracle_normal runaway");
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (arrow_id a : q.live_arrows_from(end(q, p))) {
        Path ext = p;
        if (ext.trivial()) ext.base = q.arrow(a).source;
        ext.arrows.push_back(a);
        if (normal(ext)) next.push_back(std::move(ext));
      }
    out.insert(out.end(), next.begin(), next.end());
    if (out.size() > width_guard) throw TooLarge("oracle_normal too wide");
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reduction with every choice randomized: which term, which reducer, which
// occurrence. Used to check that normal forms are strategy-free.
template <Field K>
Element<K> randomized_reduce(const Quiver& q, Element<K> x,
                             const std::vector<UniformElement<K>>& basis,
                             const AdmissibleOrder& ord,
                             std::mt19937_64& rng) {
  struct Move {
    const UniformElement<K>* g;
    Path p, pre, suf;
  };
  std::vector<std::pair<const UniformElement<K>*, Path>> tips;
  for (const auto& g : basis)
    if (!g.element.is_zero()) tips.push_back({&g, tip(g.element, ord)});
  for (;;) {
    std::vector<Move> moves;
    for (const auto& [p, c] : x.terms())
      for (const auto& [g, t] : tips)
        for (auto& [pre, suf] : subpath_occurrences(q, t, p))
          moves.push_back({g, p, pre, suf});
    if (moves.empty()) return x;
    const Move& m = moves[rng() % moves.size()];
    K c = *x.coefficient(m.p);
    x -= c * m.g->element.framed(q, m.pre, m.suf);
  }
}

inline int rnd(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline Quiver random_quiver(std::mt19937_64& rng, int max_v = 6,
                            int max_a = 10) {
  int nv = rnd(rng, 1, max_v);
  int na = rnd(rng, 1, max_a);
  std::vector<std::string> names;
  for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i + 1));
  std::vector<Arrow> arrows;
  for (int i = 0; i < na; ++i)
    arrows.push_back({-1, rnd(rng, 0, nv - 1), rnd(rng, 0, nv - 1),
                      "x" + std::to_string(i + 1)});
  return Quiver(std::move(names), std::move(arrows));
}

// Random minimal admissible tip set, with the all-length-2 fallback when the
// sampled set leaves N infinite or too large.
inline TipSet random_tipset(std::mt19937_64& rng, const Quiver& q,
                            int dim_guard = 60) {
  std::vector<Path> len2;
  for (const Path& p : all_paths_up_to_length(q, 2))
    if (p.length() == 2) len2.push_back(p);
  TipSet fallback = minimal_tipset(q, len2);

  int maxlen = rnd(rng, 2, 4);
  std::vector<Path> pool;
  for (const Path& p : all_paths_up_to_length(q, maxlen))
    if (p.length() >= 2) pool.push_back(p);
  if (pool.empty()) return TipSet{};
  std::vector<Path> picked;
  for (const Path& p : pool)
    if (rng() % 3 == 0 && picked.size() < 8) picked.push_back(p);
  TipSet t = minimal_tipset(q, picked);
  auto adm = admissibility_of_tips(q, t);
  if (!adm.admissible) return fallback;
  auto n = normal_basis(q, t, std::max(adm.length_bound, 1));
  if (static_cast<int>(n.size()) > dim_guard) return fallback;
  return t;
}

inline Element<Rational> random_element(std::mt19937_64& rng, const Quiver& q,
                                        int maxlen, int max_terms) {
  auto pool = all_paths_up_to_length(q, maxlen);
  Element<Rational> x;
  if (pool.empty()) return x;
  int terms = rnd(rng, 1, max_terms);
  const long nums[] = {1, -1, 2, -3, 1, 5};
  const long dens[] = {1, 1, 3, 1, 2, 1};
  for (int i = 0; i < terms; ++i) {
    int ci = rnd(rng, 0, 5);
    x.add_term(pool[rng() % pool.size()], Rational(nums[ci], dens[ci]));
  }
  return x;
}

// Adds a lower-order same-endpoint tail of length >= 2 to some of the tips.
// Returns nothing when no tip admits a tail (the result would stay monomial).
inline std::optional<std::vector<Element<Rational>>> perturb_monomial(
    std::mt19937_64& rng, const Quiver& q, const TipSet& t,
    const AdmissibleOrder& ord) {
  auto adm = admissibility_of_tips(q, t);
  if (!adm.admissible) return std::nullopt;
  auto normal = normal_basis(q, t, std::max(adm.length_bound, 1));
  const long nums[] = {1, -1, 2, -2, 1, -1};
  const long dens[] = {1, 1, 1, 1, 2, 2};
  std::vector<Element<Rational>> gens;
  bool tailed = false;
  for (const Path& m : t.members) {
    Element<Rational> g = Element<Rational>::path(m);
    if (rng() % 3 != 0) {
      std::vector<const Path*> cands;
      for (const Path& n : normal)
        if (n.length() >= 2 && origin(q, n) == origin(q, m) &&
            end(q, n) == end(q, m) && ord.less(n, m))
          cands.push_back(&n);
      if (!cands.empty()) {
        int pick = rnd(rng, 0, static_cast<int>(cands.size()) - 1);
        int ci = rnd(rng, 0, 5);
        g.add_term(*cands[pick], Rational(nums[ci], dens[ci]));
        tailed = true;
      }
    }
    gens.push_back(std::move(g));
  }
  if (!tailed) return std::nullopt;
  return gens;
}

}  // namespace qhdtest
