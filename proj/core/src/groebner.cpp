#include "qhd/groebner.hpp"

#include <algorithm>
#include <map>

#include "qhd/errors.hpp"

namespace qhd {

int TipSet::max_length() const {
  int m = 0;
  for (const auto& p : members) m = std::max(m, p.length());
  return m;
}

bool TipSet::contains(const Path& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

TipSet make_tipset(std::vector<Path> paths) {
  for (const auto& p : paths)
    if (p.length() < 1)
      throw PreconditionFailed("trivial path cannot generate a monomial ideal");
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return TipSet{std::move(paths)};
}

TipSet minimal_tipset(const Quiver& q, const std::vector<Path>& paths) {
  TipSet all = make_tipset(paths);
  std::vector<Path> keep;
  for (const auto& p : all.members) {
    bool absorbed = false;
    for (const auto& t : all.members)
      if (t != p && is_subpath(q, t, p)) {
        absorbed = true;
        break;
      }
    if (!absorbed) keep.push_back(p);
  }
  return TipSet{std::move(keep)};
}

bool tip_divides(const Quiver& q, const TipSet& t, const Path& p) {
  for (const auto& m : t.members)
    if (is_subpath(q, m, p)) return true;
  return false;
}

namespace {

// p already normal; checks whether p extended by arrow a stays normal, which
// only requires looking at tips ending exactly at the new arrow.
bool extension_normal(const TipSet& t, const Path& p, arrow_id a) {
  for (const auto& m : t.members) {
    int k = m.length();
    if (k < 1 || k > p.length() + 1) continue;
    if (m.arrows.back() != a) continue;
    if (std::equal(m.arrows.begin(), m.arrows.end() - 1,
                   p.arrows.end() - (k - 1)))
      return false;
  }
  return true;
}

Path extend(const Quiver& q, const Path& p, arrow_id a) {
  Path out = p;
  if (out.trivial()) out.base = q.arrow(a).source;
  out.arrows.push_back(a);
  return out;
}

}  // namespace

std::vector<Path> normal_basis(const Quiver& q, const TipSet& t, int cap) {
  if (cap < 1) throw PreconditionFailed("cap must be positive");
  std::vector<Path> out, frontier;
  for (vertex_id v : q.live_vertices()) frontier.push_back(Path::vertex(v));
  out = frontier;
  for (int len = 1; !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (arrow_id a : q.live_arrows_from(end(q, p)))
        if (extension_normal(t, p, a)) next.push_back(extend(q, p, a));
    if (next.empty()) break;
    if (len >= cap)
      throw CapExceeded("normal paths still appear at the length cap");
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Admissibility admissibility_of_tips(const Quiver& q, const TipSet& t) {
  int m = std::max(2, t.max_length());
  int w = m - 1;

  std::vector<Path> level;
  for (vertex_id v : q.live_vertices()) level.push_back(Path::vertex(v));
  if (level.empty()) return {true, 0};
  int maxlen = 0;
  for (int len = 1; len <= w; ++len) {
    std::vector<Path> next;
    for (const Path& p : level)
      for (arrow_id a : q.live_arrows_from(end(q, p)))
        if (extension_normal(t, p, a)) next.push_back(extend(q, p, a));
    if (next.empty()) return {true, maxlen + 1};
    maxlen = len;
    level = std::move(next);
  }

  // level now holds every normal path of length w: the window-graph nodes.
  std::map<Path, int> index;
  for (int i = 0; i < static_cast<int>(level.size()); ++i) index[level[i]] = i;
  int n = static_cast<int>(level.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (arrow_id a : q.live_arrows_from(end(q, level[i]))) {
      if (!extension_normal(t, level[i], a)) continue;
      Path win = extend(q, level[i], a);
      win.arrows.erase(win.arrows.begin());
      win.base = q.arrow(win.arrows.front()).source;
      adj[i].push_back(index.at(win));
    }

  // Tricolor DFS: cycle means infinitely many normal paths; otherwise the
  // longest walk gives the exact normal length bound.
  std::vector<int> color(n, 0), longest(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] == 2) continue;
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [u, next_edge] = stack.back();
      if (next_edge < adj[u].size()) {
        int v = adj[u][next_edge++];
        if (color[v] == 1) return {false, 0};
        if (color[v] == 0) {
          color[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        int best = 0;
        for (int v : adj[u]) best = std::max(best, 1 + longest[v]);
        longest[u] = best;
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  int walk = 0;
  for (int i = 0; i < n; ++i) walk = std::max(walk, longest[i]);
  return {true, w + walk + 1};
}

}  // namespace qhd
