#include "qhd/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhd {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  vertex_live_.assign(vertex_names_.size(), true);
  arrow_live_.assign(arrows_.size(), true);
  for (int i = 0; i < arrow_count(); ++i) {
    auto& a = arrows_[i];
    a.id = i;
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 ||
        a.target >= vertex_count())
      throw std::invalid_argument("arrow endpoint out of range");
  }
}

int Quiver::live_vertex_count() const {
  return static_cast<int>(
      std::count(vertex_live_.begin(), vertex_live_.end(), true));
}

std::vector<vertex_id> Quiver::live_vertices() const {
  std::vector<vertex_id> out;
  for (vertex_id v = 0; v < vertex_count(); ++v)
    if (vertex_live_[v]) out.push_back(v);
  return out;
}

std::vector<arrow_id> Quiver::live_arrows() const {
  std::vector<arrow_id> out;
  for (arrow_id a = 0; a < arrow_count(); ++a)
    if (arrow_live_[a]) out.push_back(a);
  return out;
}

std::vector<arrow_id> Quiver::live_arrows_from(vertex_id v) const {
  std::vector<arrow_id> out;
  for (arrow_id a = 0; a < arrow_count(); ++a)
    if (arrow_live_[a] && arrows_[a].source == v) out.push_back(a);
  return out;
}

std::optional<vertex_id> Quiver::find_vertex(const std::string& name) const {
  for (vertex_id v = 0; v < vertex_count(); ++v)
    if (vertex_live_[v] && vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<arrow_id> Quiver::find_arrow(const std::string& name) const {
  for (arrow_id a = 0; a < arrow_count(); ++a)
    if (arrow_live_[a] && arrows_[a].name == name) return a;
  return std::nullopt;
}

Quiver Quiver::without(const VertexSet& removed) const {
  Quiver out = *this;
  for (vertex_id v : removed) {
    if (v < 0 || v >= vertex_count() || !vertex_live_[v])
      throw std::invalid_argument("removed vertex not live");
    out.vertex_live_[v] = false;
  }
  for (arrow_id a = 0; a < arrow_count(); ++a) {
    if (!arrow_live_[a]) continue;
    if (removed.count(arrows_[a].source) || removed.count(arrows_[a].target))
      out.arrow_live_[a] = false;
  }
  return out;
}

bool Quiver::compact_words() const {
  for (const auto& a : arrows_)
    if (a.name.size() != 1) return false;
  return true;
}

Path Path::of(const Quiver& q, std::vector<arrow_id> arrows) {
  if (arrows.empty()) throw std::invalid_argument("Path::of needs arrows");
  for (size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw std::invalid_argument("arrows do not compose");
  Path p;
  p.base = q.arrow(arrows.front()).source;
  p.arrows = std::move(arrows);
  return p;
}

vertex_id origin(const Quiver& q, const Path& p) {
  return p.trivial() ? p.base : q.arrow(p.arrows.front()).source;
}

vertex_id end(const Quiver& q, const Path& p) {
  return p.trivial() ? p.base : q.arrow(p.arrows.back()).target;
}

std::vector<vertex_id> visits(const Quiver& q, const Path& p) {
  std::vector<vertex_id> out;
  out.push_back(origin(q, p));
  for (arrow_id a : p.arrows) out.push_back(q.arrow(a).target);
  return out;
}

bool visits_any(const Quiver& q, const Path& p, const VertexSet& s) {
  for (vertex_id v : visits(q, p))
    if (s.count(v)) return true;
  return false;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return q.vertex_name(p.base);
  bool compact = q.compact_words();
  std::string out;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i && !compact) out += '*';
    out += q.arrow_name(p.arrows[i]);
  }
  return out;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& q2) {
  if (end(q, p) != origin(q, q2)) return std::nullopt;
  if (p.trivial()) return q2;
  Path out = p;
  out.arrows.insert(out.arrows.end(), q2.arrows.begin(), q2.arrows.end());
  return out;
}

std::vector<std::pair<Path, Path>> subpath_occurrences(const Quiver& q,
                                                       const Path& t,
                                                       const Path& p) {
  std::vector<std::pair<Path, Path>> out;
  auto vs = visits(q, p);
  int n = p.length(), m = t.length();
  for (int i = 0; i + m <= n; ++i) {
    if (m == 0) {
      if (vs[i] != t.base) continue;
    } else if (!std::equal(t.arrows.begin(), t.arrows.end(),
                           p.arrows.begin() + i)) {
      continue;
    }
    Path pre = i == 0 ? Path::vertex(vs[0])
                      : Path{vs[0], {p.arrows.begin(), p.arrows.begin() + i}};
    Path suf = i + m == n
                   ? Path::vertex(vs[i + m])
                   : Path{vs[i + m], {p.arrows.begin() + i + m, p.arrows.end()}};
    out.emplace_back(std::move(pre), std::move(suf));
  }
  return out;
}

bool is_subpath(const Quiver& q, const Path& t, const Path& p) {
  return !subpath_occurrences(q, t, p).empty();
}

std::vector<Overlap> overlap_data(const Path& t1, const Path& t2) {
  std::vector<Overlap> out;
  int n1 = t1.length(), n2 = t2.length();
  for (int s = 1; s < std::min(n1, n2); ++s)
    if (std::equal(t2.arrows.begin(), t2.arrows.begin() + s,
                   t1.arrows.end() - s))
      out.push_back({s});
  return out;
}

Path glue(const Quiver& q, const Path& t1, const Path& t2, int shared) {
  std::vector<arrow_id> w(t1.arrows.begin(), t1.arrows.end());
  w.insert(w.end(), t2.arrows.begin() + shared, t2.arrows.end());
  return Path::of(q, std::move(w));
}

std::vector<Path> overlaps(const Quiver& q, const Path& t1, const Path& t2) {
  std::vector<Path> out;
  for (auto ov : overlap_data(t1, t2)) out.push_back(glue(q, t1, t2, ov.shared));
  return out;
}

std::vector<Path> all_paths_up_to_length(const Quiver& q, int d) {
  std::vector<Path> out, frontier;
  for (vertex_id v : q.live_vertices()) frontier.push_back(Path::vertex(v));
  out = frontier;
  for (int len = 1; len <= d && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (arrow_id a : q.live_arrows_from(end(q, p))) {
        Path ext = p;
        if (ext.trivial()) ext.base = q.arrow(a).source;
        ext.arrows.push_back(a);
        next.push_back(std::move(ext));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace qhd
