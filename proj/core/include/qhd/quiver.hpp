#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qhd {

using vertex_id = int;
using arrow_id = int;

using VertexSet = std::set<vertex_id>;

struct Arrow {
  arrow_id id = -1;
  vertex_id source = -1;
  vertex_id target = -1;
  std::string name;
};

// A finite quiver. Vertex and arrow ids are dense indices in declaration
// order. Quotient constructions work on subquivers that share the parent's
// id space, so vertices and arrows carry a live flag instead of being
// renumbered; dead entities are invisible to every enumeration.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  bool vertex_live(vertex_id v) const { return vertex_live_[v]; }
  bool arrow_live(arrow_id a) const { return arrow_live_[a]; }
  int live_vertex_count() const;
  std::vector<vertex_id> live_vertices() const;
  std::vector<arrow_id> live_arrows() const;
  std::vector<arrow_id> live_arrows_from(vertex_id v) const;

  const Arrow& arrow(arrow_id a) const { return arrows_[a]; }
  const std::string& vertex_name(vertex_id v) const { return vertex_names_[v]; }
  const std::string& arrow_name(arrow_id a) const { return arrows_[a].name; }
  std::optional<vertex_id> find_vertex(const std::string& name) const;
  std::optional<arrow_id> find_arrow(const std::string& name) const;

  // Subquiver with the vertices of `removed` and every incident arrow dropped.
  Quiver without(const VertexSet& removed) const;

  // Arrow words render without separators only when every arrow name is a
  // single character (the usual one-letter-alphabet convention).
  bool compact_words() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<bool> vertex_live_;
  std::vector<Arrow> arrows_;
  std::vector<bool> arrow_live_;
};

// A directed path: the composable arrow sequence, or a single vertex when the
// length is zero. `base` is the origin vertex and is kept in sync with the
// first arrow for positive lengths, so structural comparison is well defined.
struct Path {
  vertex_id base = -1;
  std::vector<arrow_id> arrows;

  static Path vertex(vertex_id v) { return Path{v, {}}; }
  static Path of(const Quiver& q, std::vector<arrow_id> arrows);

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }

  // Length-major structural order; independent of any admissible order.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    return a.base <=> b.base;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

vertex_id origin(const Quiver& q, const Path& p);
vertex_id end(const Quiver& q, const Path& p);

// Vertices met along p, endpoints included: length+1 entries.
std::vector<vertex_id> visits(const Quiver& q, const Path& p);
bool visits_any(const Quiver& q, const Path& p, const VertexSet& s);

std::string path_to_string(const Quiver& q, const Path& p);

// pq when end(p) = origin(q); empty otherwise. Trivial paths are local units.
std::optional<Path> compose(const Quiver& q, const Path& p, const Path& q2);

// Every factorization p = prefix . t . suffix, left to right. A trivial t at
// vertex v matches each visit of v along p.
std::vector<std::pair<Path, Path>> subpath_occurrences(const Quiver& q,
                                                       const Path& t,
                                                       const Path& p);

bool is_subpath(const Quiver& q, const Path& t, const Path& p);

// A proper overlap: a nonempty suffix of t1 equal to a prefix of t2, shorter
// than both. `shared` is its length; glue(t1, t2, shared) is the glued path.
struct Overlap {
  int shared;
};

std::vector<Overlap> overlap_data(const Path& t1, const Path& t2);
Path glue(const Quiver& q, const Path& t1, const Path& t2, int shared);

// The glued paths of all proper overlaps of t1 with t2 (in this orientation),
// self-overlaps included. Both paths must have length >= 1.
std::vector<Path> overlaps(const Quiver& q, const Path& t1, const Path& t2);

// All live paths of length <= d, unsorted (enumeration order).
std::vector<Path> all_paths_up_to_length(const Quiver& q, int d);

}  // namespace qhd
