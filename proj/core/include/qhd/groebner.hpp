#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "qhd/element.hpp"
#include "qhd/errors.hpp"
#include "qhd/order.hpp"
#include "qhd/quiver.hpp"

namespace qhd {

// Minimal monomial generating set of a monomial ideal: a subpath antichain.
struct TipSet {
  std::vector<Path> members;  // structurally sorted, no duplicates

  bool empty() const { return members.empty(); }
  int size() const { return static_cast<int>(members.size()); }
  int max_length() const;
  bool contains(const Path& p) const;
};

TipSet make_tipset(std::vector<Path> paths);

// Drops every member containing another member as a subpath.
TipSet minimal_tipset(const Quiver& q, const std::vector<Path>& paths);

// True when some member of t occurs inside p.
bool tip_divides(const Quiver& q, const TipSet& t, const Path& p);

// All paths with no member of t as a subpath, grown by breadth-first arrow
// extension. Throws CapExceeded when normal paths still appear at length cap.
std::vector<Path> normal_basis(const Quiver& q, const TipSet& t, int cap);

struct Admissibility {
  bool admissible = false;
  int length_bound = 0;  // least d with every length-d path tip-divisible
};

// Exact finiteness test for the normal-path set of a monomial ideal. Paths of
// length >= max tip length extend normally depending only on their trailing
// window, so N is infinite precisely when the window graph has a cycle; when
// it is acyclic the longest walk bounds the normal lengths.
Admissibility admissibility_of_tips(const Quiver& q, const TipSet& t);

template <Field K>
struct GroebnerData {
  AdmissibleOrder order;
  std::vector<UniformElement<K>> basis;  // reduced, monic tips, sorted by tip
  TipSet tips;
  std::vector<Path> normal;  // N, structurally sorted
  int length_bound = 0;

  bool all_monomial() const {
    for (const auto& g : basis)
      if (g.element.term_count() != 1) return false;
    return true;
  }
};

template <Field K>
Path tip(const Element<K>& x, const AdmissibleOrder& ord) {
  if (x.is_zero()) throw PreconditionFailed("tip of the zero element");
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms())
    if (!best || ord.greater(p, *best)) best = &p;
  return *best;
}

namespace detail {

template <Field K>
struct Reducer {
  const UniformElement<K>* g;
  Path t;
};

template <Field K>
std::vector<Reducer<K>> reducers(const std::vector<UniformElement<K>>& basis,
                                 const AdmissibleOrder& ord) {
  std::vector<Reducer<K>> out;
  for (const auto& g : basis)
    if (!g.element.is_zero()) out.push_back({&g, tip(g.element, ord)});
  return out;
}

// One rewrite of the chosen term, or false when it is already normal.
// Among the divisions of p we take the leftmost occurrence, breaking position
// ties by the smaller tip, so reduction is strategy-free to the caller.
template <Field K>
bool rewrite_term(const Quiver& q, Element<K>& x, const Path& p,
                  const std::vector<Reducer<K>>& rs,
                  const AdmissibleOrder& ord) {
  const Reducer<K>* best = nullptr;
  int best_pos = -1;
  Path best_pre, best_suf;
  for (const auto& r : rs) {
    auto occ = subpath_occurrences(q, r.t, p);
    if (occ.empty()) continue;
    int pos = occ.front().first.length();
    if (best && (pos > best_pos ||
                 (pos == best_pos && !ord.less(r.t, best->t))))
      continue;
    best = &r;
    best_pos = pos;
    best_pre = occ.front().first;
    best_suf = occ.front().second;
  }
  if (!best) return false;
  K c = *x.coefficient(p);
  x -= c * best->g->element.framed(q, best_pre, best_suf);
  return true;
}

}  // namespace detail

// Normal form of x modulo G: rewrite the largest reducible term until none is
// left. Requires monic tips; terminates because each step replaces a path by
// strictly smaller ones.
template <Field K>
Element<K> reduce(const Quiver& q, Element<K> x,
                  const std::vector<UniformElement<K>>& basis,
                  const AdmissibleOrder& ord) {
  auto rs = detail::reducers(basis, ord);
  if (rs.empty()) return x;
  for (;;) {
    const Path* target = nullptr;
    for (const auto& [p, c] : x.terms()) {
      if (target && !ord.greater(p, *target)) continue;
      for (const auto& r : rs)
        if (is_subpath(q, r.t, p)) {
          target = &p;
          break;
        }
    }
    if (!target) return x;
    Path p = *target;  // copy: the rewrite invalidates term references
    detail::rewrite_term(q, x, p, rs, ord);
  }
}

namespace detail {

// S-element of an overlap: both gluings of the shared stem, subtracted, so
// the common tip cancels.
template <Field K>
Element<K> s_element(const Quiver& q, const UniformElement<K>& gi,
                     const Path& ti, const UniformElement<K>& gj,
                     const Path& tj, int shared) {
  Path right = Path::of(
      q, {tj.arrows.begin() + shared, tj.arrows.end()});
  Path left = Path::of(
      q, {ti.arrows.begin(), ti.arrows.end() - shared});
  Element<K> s = gi.element.framed(q, Path::vertex(origin(q, ti)), right);
  s -= gj.element.framed(q, left, Path::vertex(end(q, tj)));
  return s;
}

}  // namespace detail

// Overlap completion to the reduced Groebner basis. Generators must lie in
// the square of the arrow ideal. Throws CapExceeded when a remainder tip
// would exceed cap or when the completed ideal is not admissible.
template <Field K>
GroebnerData<K> complete(const Quiver& q, const std::vector<Element<K>>& gens,
                         const AdmissibleOrder& ord, int cap) {
  if (cap < 1) throw PreconditionFailed("cap must be positive");

  std::deque<Element<K>> inbox;
  for (const auto& x : gens)
    for (auto& u : uniformize(q, x)) {
      for (const auto& [p, c] : u.element.terms())
        if (p.length() < 2)
          throw PreconditionFailed(
              "relation has a term of length < 2; the ideal must sit inside "
              "the square of the arrow ideal");
      inbox.push_back(std::move(u.element));
    }

  struct Entry {
    UniformElement<K> g;
    Path t;
    bool alive;
  };
  std::vector<Entry> entries;

  struct Task {
    Path glued;
    int i, j, shared;
  };
  auto task_less = [&ord](const Task& a, const Task& b) {
    if (auto c = ord.compare(a.glued, b.glued); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.shared < b.shared;
  };
  std::set<Task, decltype(task_less)> tasks(task_less);

  auto alive_basis = [&] {
    std::vector<UniformElement<K>> b;
    for (const auto& e : entries)
      if (e.alive) b.push_back(e.g);
    return b;
  };

  while (!inbox.empty() || !tasks.empty()) {
    Element<K> x;
    if (!inbox.empty()) {
      x = std::move(inbox.front());
      inbox.pop_front();
    } else {
      Task t = *tasks.begin();
      tasks.erase(tasks.begin());
      if (!entries[t.i].alive || !entries[t.j].alive) continue;
      x = detail::s_element(q, entries[t.i].g, entries[t.i].t, entries[t.j].g,
                            entries[t.j].t, t.shared);
    }
    Element<K> r = reduce(q, std::move(x), alive_basis(), ord);
    if (r.is_zero()) continue;
    Path t = tip(r, ord);
    if (t.length() > cap)
      throw CapExceeded("completion produced a tip beyond the length cap");
    r *= r.coefficient(t)->inverse();

    int k = static_cast<int>(entries.size());
    for (int j = 0; j < k; ++j)
      if (entries[j].alive && is_subpath(q, t, entries[j].t)) {
        entries[j].alive = false;
        inbox.push_back(entries[j].g.element);
      }
    entries.push_back({{r, origin(q, t), end(q, t)}, t, true});
    for (int j = 0; j <= k; ++j) {
      if (!entries[j].alive) continue;
      for (auto ov : overlap_data(entries[k].t, entries[j].t))
        tasks.insert(
            {glue(q, entries[k].t, entries[j].t, ov.shared), k, j, ov.shared});
      if (j != k)
        for (auto ov : overlap_data(entries[j].t, entries[k].t))
          tasks.insert({glue(q, entries[j].t, entries[k].t, ov.shared), j, k,
                        ov.shared});
    }
  }

  GroebnerData<K> out{ord, {}, {}, {}, 0};
  std::vector<Entry*> alive;
  for (auto& e : entries)
    if (e.alive) alive.push_back(&e);
  // Tail-reduce in ascending tip order: rewrites only ever involve smaller
  // tips, so one pass lands on the reduced basis.
  std::sort(alive.begin(), alive.end(),
            [&](const Entry* a, const Entry* b) { return ord.less(a->t, b->t); });
  std::vector<Path> tip_paths;
  for (Entry* e : alive) tip_paths.push_back(e->t);
  for (size_t i = 0; i < alive.size(); ++i) {
    Element<K> tail = alive[i]->g.element;
    tail.add_term(alive[i]->t, -K::one());
    Element<K> red = reduce(q, std::move(tail), out.basis, ord);
    red.add_term(alive[i]->t, K::one());
    out.basis.push_back({red, alive[i]->g.origin, alive[i]->g.end});
  }
  out.tips = make_tipset(std::move(tip_paths));

  auto adm = admissibility_of_tips(q, out.tips);
  if (!adm.admissible)
    throw CapExceeded("normal basis is infinite: the ideal is not admissible");
  out.length_bound = adm.length_bound;
  out.normal = normal_basis(q, out.tips, std::max(adm.length_bound, 1));
  return out;
}

template <Field K>
struct AdmissibilityWitness {
  bool admissible = false;
  int length_bound = 0;
};

template <Field K>
AdmissibilityWitness<K> is_admissible(const Quiver& q,
                                      const GroebnerData<K>& data) {
  for (const Path& t : data.tips.members)
    if (t.length() < 2) return {false, 0};
  auto adm = admissibility_of_tips(q, data.tips);
  return {adm.admissible, adm.length_bound};
}

template <Field K>
int dimension(const GroebnerData<K>& data) {
  if (data.length_bound <= 0)
    throw PreconditionFailed("dimension of uncertified basis data");
  return static_cast<int>(data.normal.size());
}

template <Field K>
const TipSet& associated_monomial(const GroebnerData<K>& data) {
  return data.tips;
}

// Groebner data of the monomial ideal generated by t (its own reduced basis).
template <Field K>
GroebnerData<K> monomial_data(const Quiver& q, const TipSet& t,
                              const AdmissibleOrder& ord) {
  GroebnerData<K> out{ord, {}, t, {}, 0};
  for (const Path& p : t.members)
    out.basis.push_back(
        {Element<K>::path(p), origin(q, p), end(q, p)});
  auto adm = admissibility_of_tips(q, t);
  if (!adm.admissible)
    throw CapExceeded("normal basis is infinite: the ideal is not admissible");
  out.length_bound = adm.length_bound;
  out.normal = normal_basis(q, t, std::max(adm.length_bound, 1));
  return out;
}

}  // namespace qhd
