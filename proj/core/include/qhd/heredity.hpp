#pragma once

#include <optional>
#include <vector>

#include "qhd/groebner.hpp"
#include "qhd/quiver.hpp"

namespace qhd {

// v sits strictly inside some member of t: t = p1 . v . p2 with both factors
// of positive length. Endpoint visits do not count.
bool properly_internal(const Quiver& q, vertex_id v, const TipSet& t);

// Vertices of `remaining` that are not properly internal to t.
VertexSet heredity_candidates(const Quiver& q, const TipSet& t,
                              const VertexSet& remaining);

// Tips surviving the removal of S: exactly those visiting no vertex of S.
TipSet restrict_tips(const Quiver& q, const TipSet& t, const VertexSet& s);

struct EliminationOrdering {
  std::vector<vertex_id> ordering;   // full permutation on success
  std::optional<int> failure_index;  // first step with no candidate
  VertexSet blocked;                 // vertices left at that step

  bool success() const { return !failure_index.has_value(); }
};

// Repeatedly eliminates the smallest-id vertex that is not properly internal
// to the current restricted tips. A tip survives restriction iff it avoids
// every removed vertex, so restricted tip sets only shrink; a vertex valid at
// any point stays valid, and the greedy choice never loses a completion.
EliminationOrdering greedy_ordering(const Quiver& q, const TipSet& t);

// Plain exhaustive search over vertex permutations; the independent oracle
// for the greedy procedure. Throws TooLarge above 8 live vertices.
bool brute_force_qh(const Quiver& q, const TipSet& t);

}  // namespace qhd
