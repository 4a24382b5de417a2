#include "exc/graphs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace exc {

EdgeGraph::EdgeGraph(std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a == b) throw std::domain_error("EdgeGraph: loop edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::domain_error("EdgeGraph: repeated edge");
  edges_ = std::move(edges);
}

std::vector<int> EdgeGraph::vertices() const {
  std::set<int> vs;
  for (const auto& [a, b] : edges_) {
    vs.insert(a);
    vs.insert(b);
  }
  return {vs.begin(), vs.end()};
}

int EdgeGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_)
    if (a == v || b == v) ++d;
  return d;
}

bool EdgeGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

int EdgeGraph::distance(int u, int v) const {
  if (u == v) return 0;
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, int> dist;
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      q.push(y);
    }
  }
  return -1;
}

EdgeGraph EdgeGraph::relabeled(const std::vector<std::pair<int, int>>& vertex_map) const {
  std::map<int, int> m(vertex_map.begin(), vertex_map.end());
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& [a, b] : edges_) out.emplace_back(m.count(a) ? m.at(a) : a, m.count(b) ? m.at(b) : b);
  return EdgeGraph(std::move(out));
}

EdgeGraph cut(const EdgeGraph& g, std::pair<int, int> e, int v) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw std::domain_error("cut: edge not in graph");
  if (v != e.first && v != e.second) throw std::domain_error("cut: vertex not an endpoint");
  int u = (v == e.first) ? e.second : e.first;
  int fresh = g.vertices().back() + 1;
  std::vector<std::pair<int, int>> edges;
  for (const auto& ed : g.edges())
    if (ed != e) edges.push_back(ed);
  edges.emplace_back(u, fresh);
  return EdgeGraph(std::move(edges));
}

EdgeGraph glue(const EdgeGraph& g, int u, int v) {
  int d = g.distance(u, v);
  if (d >= 0 && d < 3) throw std::domain_error("glue: vertices at distance below three");
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    if (a == v) a = u;
    if (b == v) b = u;
    edges.emplace_back(a, b);
  }
  return EdgeGraph(std::move(edges));
}

namespace {

using Coloring = std::vector<int>;

// Refine colors by (color, sorted neighbor-color multiset) until stable.
void refine(const std::vector<std::vector<int>>& adj, Coloring& color) {
  const int n = static_cast<int>(adj.size());
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> ns;
      for (int w : adj[v]) ns.push_back(color[w]);
      std::sort(ns.begin(), ns.end());
      sig[v] = {color[v], std::move(ns)};
    }
    std::map<std::pair<int, std::vector<int>>, int> order;
    for (const auto& s : sig) order.emplace(s, 0);
    int next = 0;
    for (auto& [key, idx] : order) idx = next++;
    Coloring fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = order.at(sig[v]);
    if (fresh == color) return;
    color = std::move(fresh);
  }
}

void canonical_search(const std::vector<std::vector<int>>& adj, Coloring color,
                      std::vector<std::pair<int, int>>& best, bool& has_best) {
  const int n = static_cast<int>(adj.size());
  refine(adj, color);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
  int branch_color = -1;
  for (const auto& [c, vs] : classes)
    if (vs.size() > 1) {
      branch_color = c;
      break;
    }
  if (branch_color < 0) {
    // Discrete coloring: read the edge list in canonical labels.
    std::vector<std::pair<int, int>> enc;
    for (int v = 0; v < n; ++v)
      for (int w : adj[v])
        if (color[v] < color[w]) enc.emplace_back(color[v] + 1, color[w] + 1);
    std::sort(enc.begin(), enc.end());
    if (!has_best || enc < best) {
      best = std::move(enc);
      has_best = true;
    }
    return;
  }
  for (int v : classes[branch_color]) {
    Coloring branched = color;
    for (int w = 0; w < n; ++w)
      if (branched[w] > branch_color || (branched[w] == branch_color && w != v)) ++branched[w];
    canonical_search(adj, std::move(branched), best, has_best);
  }
}

}  // namespace

namespace {

std::vector<std::pair<int, int>> canonical_connected(const std::vector<std::pair<int, int>>& edges) {
  std::set<int> vset;
  for (const auto& [a, b] : edges) {
    vset.insert(a);
    vset.insert(b);
  }
  std::vector<int> vs(vset.begin(), vset.end());
  const int n = static_cast<int>(vs.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[vs[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[pos[a]].push_back(pos[b]);
    adj[pos[b]].push_back(pos[a]);
  }
  std::vector<std::pair<int, int>> best;
  bool has_best = false;
  canonical_search(adj, Coloring(n, 0), best, has_best);
  return best;
}

}  // namespace

EdgeGraph canonical_graph(const EdgeGraph& g) {
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n == 0) return g;
  if (n > 24) throw std::domain_error("canonical_graph: more than 24 non-isolated vertices");
  // Canonicalize per connected component and concatenate; the search space
  // then stays small even for unions of many symmetric pieces.
  std::map<int, int> comp;
  int comp_count = 0;
  for (int v : vs) {
    if (comp.count(v)) continue;
    std::vector<int> stack{v};
    comp[v] = comp_count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : g.edges()) {
        int other = -1;
        if (a == x) other = b;
        if (b == x) other = a;
        if (other >= 0 && !comp.count(other)) {
          comp[other] = comp_count;
          stack.push_back(other);
        }
      }
    }
    ++comp_count;
  }
  std::vector<std::vector<std::pair<int, int>>> parts(comp_count);
  for (const auto& e : g.edges()) parts[comp.at(e.first)].push_back(e);
  struct Piece {
    int vertices;
    std::vector<std::pair<int, int>> enc;
  };
  std::vector<Piece> pieces;
  for (const auto& part : parts) {
    std::vector<std::pair<int, int>> enc = canonical_connected(part);
    int vmax = 0;
    for (const auto& [a, b] : enc) vmax = std::max(vmax, std::max(a, b));
    pieces.push_back({vmax, std::move(enc)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
    if (x.vertices != y.vertices) return x.vertices < y.vertices;
    if (x.enc.size() != y.enc.size()) return x.enc.size() < y.enc.size();
    return x.enc < y.enc;
  });
  std::vector<std::pair<int, int>> merged;
  int offset = 0;
  for (const auto& p : pieces) {
    for (const auto& [a, b] : p.enc) merged.emplace_back(a + offset, b + offset);
    offset += p.vertices;
  }
  return EdgeGraph(std::move(merged));
}

EdgeGraph k4_graph() { return EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

EdgeGraph house_graph() {
  // Triangle 1-2-3 on top of the square 1-3-4-5.
  return EdgeGraph({{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

EdgeGraph six_cycle_graph() { return EdgeGraph({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}); }

EdgeGraph star_graph(int center, int leaves_from, int count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < count; ++i) edges.emplace_back(center, leaves_from + i);
  return EdgeGraph(std::move(edges));
}

BasisTypePoset basis_type_poset() {
  BasisTypePoset poset;
  std::map<EdgeGraph, int> index;
  auto intern = [&](const EdgeGraph& g, bool* fresh = nullptr) {
    auto [it, inserted] = index.emplace(g, static_cast<int>(poset.nodes.size()));
    if (inserted) poset.nodes.push_back(g);
    if (fresh) *fresh = inserted;
    return it->second;
  };
  std::vector<int> work;
  for (const EdgeGraph& top : {k4_graph(), house_graph(), six_cycle_graph()}) {
    int id = intern(canonical_graph(top));
    poset.maximal.push_back(id);
    work.push_back(id);
  }
  std::set<std::pair<int, int>> covers;
  for (size_t head = 0; head < work.size(); ++head) {
    int gi = work[head];
    EdgeGraph g = poset.nodes[gi];
    for (const auto& e : g.edges())
      for (int v : {e.first, e.second}) {
        bool fresh = false;
        int hi = intern(canonical_graph(cut(g, e, v)), &fresh);
        covers.emplace(gi, hi);
        if (fresh) work.push_back(hi);
      }
  }
  poset.covers.assign(covers.begin(), covers.end());
  return poset;
}

}  // namespace exc
