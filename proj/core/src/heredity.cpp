#include "qhd/heredity.hpp"

#include <algorithm>

#include "qhd/errors.hpp"

namespace qhd {

bool properly_internal(const Quiver& q, vertex_id v, const TipSet& t) {
  for (const auto& m : t.members) {
    auto vs = visits(q, m);
    for (size_t i = 1; i + 1 < vs.size(); ++i)
      if (vs[i] == v) return true;
  }
  return false;
}

VertexSet heredity_candidates(const Quiver& q, const TipSet& t,
                              const VertexSet& remaining) {
  VertexSet out;
  for (vertex_id v : remaining)
    if (!properly_internal(q, v, t)) out.insert(v);
  return out;
}

TipSet restrict_tips(const Quiver& q, const TipSet& t, const VertexSet& s) {
  std::vector<Path> keep;
  for (const auto& m : t.members)
    if (!visits_any(q, m, s)) keep.push_back(m);
  return TipSet{std::move(keep)};
}

EliminationOrdering greedy_ordering(const Quiver& q, const TipSet& t) {
  EliminationOrdering out;
  auto verts = q.live_vertices();
  VertexSet remaining(verts.begin(), verts.end());
  TipSet tips = t;
  while (!remaining.empty()) {
    VertexSet cands = heredity_candidates(q, tips, remaining);
    if (cands.empty()) {
      out.failure_index = static_cast<int>(out.ordering.size());
      out.blocked = remaining;
      return out;
    }
    vertex_id v = *cands.begin();
    out.ordering.push_back(v);
    remaining.erase(v);
    tips = restrict_tips(q, tips, {v});
  }
  return out;
}

bool brute_force_qh(const Quiver& q, const TipSet& t) {
  auto verts = q.live_vertices();
  if (verts.size() > 8) throw TooLarge("brute-force search beyond 8 vertices");
  std::sort(verts.begin(), verts.end());
  do {
    TipSet tips = t;
    bool ok = true;
    for (vertex_id v : verts) {
      if (properly_internal(q, v, tips)) {
        ok = false;
        break;
      }
      tips = restrict_tips(q, tips, {v});
    }
    if (ok) return true;
  } while (std::next_permutation(verts.begin(), verts.end()));
  return false;
}

}  // namespace qhd
