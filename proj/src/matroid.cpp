#include "exc/matroid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

namespace exc {

LinearMatroid::LinearMatroid(std::vector<Subset> ground, const RatMatrix& columns)
    : ground_(std::move(ground)), dim_(columns.rows()) {
  if (static_cast<int>(ground_.size()) != columns.cols())
    throw std::domain_error("LinearMatroid: label count must match column count");
  cols_.reserve(ground_.size());
  for (int c = 0; c < columns.cols(); ++c) cols_.push_back(primitive_int_vector(columns.column(c)));
}

int LinearMatroid::full_rank() const {
  std::vector<int> all(ground_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return rank_of(all);
}

int LinearMatroid::rank_of(const std::vector<int>& subset) const {
  std::vector<IntVec> rows;
  rows.reserve(subset.size());
  for (int i : subset) rows.push_back(cols_.at(i));
  return rank_int(std::move(rows));
}

bool LinearMatroid::independent(const std::vector<int>& subset) const {
  return rank_of(subset) == static_cast<int>(subset.size());
}

std::vector<int> LinearMatroid::closure(const std::vector<int>& subset) const {
  int r = rank_of(subset);
  std::vector<int> cl;
  for (int e = 0; e < ground_size(); ++e) {
    if (std::find(subset.begin(), subset.end(), e) != subset.end()) {
      cl.push_back(e);
      continue;
    }
    std::vector<int> ext = subset;
    ext.push_back(e);
    if (rank_of(ext) == r) cl.push_back(e);
  }
  std::sort(cl.begin(), cl.end());
  return cl;
}

namespace {

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

}  // namespace

std::vector<std::vector<int>> LinearMatroid::bases() const {
  if (ground_size() > 20)
    throw std::domain_error(
        "bases: ground set above the enumeration guard of 20; use the rank oracle in a streaming loop");
  const int r = full_rank();
  std::vector<std::vector<int>> out;
  for (const Subset& s : k_subsets(ground_size(), r)) {
    std::vector<int> idx;
    idx.reserve(r);
    for (int e : s) idx.push_back(e - 1);
    if (independent(idx)) out.push_back(idx);
  }
  return out;
}

std::vector<std::vector<int>> LinearMatroid::circuits(int max_size) const {
  std::vector<std::vector<int>> found;
  const int n = ground_size();
  const int r = full_rank();
  RankEngine eng(dim_);
  std::vector<int> current;

  // Depth-first over independent prefixes in lex order; a circuit is met
  // exactly once, through its lex-least independent proper prefix.
  auto rec = [&](auto&& self, int from) -> void {
    for (int e = from; e < n; ++e) {
      bool grew = eng.push(to_rat(cols_[e]));
      if (!grew) {
        eng.pop();
        std::vector<int> candidate = current;
        candidate.push_back(e);
        bool minimal = true;
        for (size_t drop = 0; drop + 1 < candidate.size() && minimal; ++drop) {
          std::vector<int> sub;
          for (size_t i = 0; i < candidate.size(); ++i)
            if (i != drop) sub.push_back(candidate[i]);
          if (rank_of(sub) != static_cast<int>(sub.size())) minimal = false;
        }
        if (minimal) found.push_back(std::move(candidate));
        continue;
      }
      current.push_back(e);
      if (static_cast<int>(current.size()) < max_size && static_cast<int>(current.size()) <= r) self(self, e + 1);
      current.pop_back();
      eng.pop();
    }
  };
  rec(rec, 0);
  return found;
}

std::vector<std::vector<int>> LinearMatroid::hyperplane_flats() const {
  if (ground_size() > 40) throw std::domain_error("hyperplane_flats: ground set above the setup guard of 40");
  const int n = ground_size();
  const int r = full_rank();
  std::set<std::vector<int>> flats;
  RankEngine eng(dim_);
  std::vector<int> current;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(current.size()) == r - 1) {
      flats.insert(closure(current));
      return;
    }
    for (int e = from; e < n; ++e) {
      if (!eng.push(to_rat(cols_[e]))) {
        eng.pop();
        continue;
      }
      current.push_back(e);
      self(self, e + 1);
      current.pop_back();
      eng.pop();
    }
  };
  rec(rec, 0);
  return {flats.begin(), flats.end()};
}

EdgeGraph LinearMatroid::subset_graph(const std::vector<int>& subset) const {
  std::vector<std::pair<int, int>> edges;
  for (int i : subset) {
    const Subset& s = ground_.at(i);
    if (s.size() != 2) throw std::domain_error("subset_graph: ground labels are not pairs");
    edges.emplace_back(s[0], s[1]);
  }
  return EdgeGraph(std::move(edges));
}

std::optional<int> LinearMatroid::ground_index(const Subset& label) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
  if (it == ground_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - ground_.begin());
}

LinearMatroid matroid_of(const PositiveMatrix& z, int k) {
  return LinearMatroid(k_subsets(z.cols(), k), wedge_power_matrix(z, k));
}

namespace {

// Wedge coordinates of two symbolic 4-vectors, lex pair order.
std::vector<MultiPoly> symbolic_wedge(const std::vector<MultiPoly>& u, const std::vector<MultiPoly>& v) {
  std::vector<MultiPoly> w;
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) w.push_back(u[r] * v[s] - u[s] * v[r]);
  return w;
}

// Chart of the positive 4x5 matrices: identity block plus the alternating
// column (-x1, x2, -x3, x4) with every x_i positive.
std::vector<std::vector<MultiPoly>> chart_columns() {
  std::vector<std::string> vars{"x1", "x2", "x3", "x4"};
  std::vector<std::vector<MultiPoly>> cols(5, std::vector<MultiPoly>(4, MultiPoly(vars)));
  for (int i = 0; i < 4; ++i) cols[i][i] = MultiPoly::constant(vars, Rational(1));
  for (int i = 0; i < 4; ++i) {
    MultiPoly x = MultiPoly::variable(vars, i);
    cols[4][i] = (i % 2 == 0) ? MultiPoly(vars) - x : x;
  }
  return cols;
}

SignPattern chart_sign_pattern(const EdgeGraph& g, const std::vector<int>& labels) {
  auto cols = chart_columns();
  auto vs = g.vertices();
  std::map<int, int> to_label;
  for (size_t i = 0; i < vs.size(); ++i) to_label[vs[i]] = labels[i];
  std::vector<std::vector<MultiPoly>> wedges;
  for (const auto& [a, b] : g.edges()) wedges.push_back(symbolic_wedge(cols[to_label[a] - 1], cols[to_label[b] - 1]));
  std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(6));
  for (int c = 0; c < 6; ++c)
    for (int r = 0; r < 6; ++r) m[r][c] = wedges[c][r];
  return coefficient_sign_pattern(poly_det(m));
}

bool poset_reachable_from(const EdgeGraph& canon, std::initializer_list<EdgeGraph> tops) {
  static const BasisTypePoset poset = basis_type_poset();
  std::map<EdgeGraph, int> index;
  for (size_t i = 0; i < poset.nodes.size(); ++i) index.emplace(poset.nodes[i], static_cast<int>(i));
  auto it = index.find(canon);
  if (it == index.end()) return false;
  std::set<int> reach;
  std::vector<int> work;
  for (const EdgeGraph& t : tops) {
    int id = index.at(canonical_graph(t));
    reach.insert(id);
    work.push_back(id);
  }
  while (!work.empty()) {
    int g = work.back();
    work.pop_back();
    for (const auto& [a, b] : poset.covers)
      if (a == g && reach.insert(b).second) work.push_back(b);
  }
  return reach.count(it->second) > 0;
}

}  // namespace

StaticDynamicReport static_or_dynamic(const EdgeGraph& basis_type) {
  StaticDynamicReport rep{StaticDynamicReport::Kind::UNKNOWN, 0, std::nullopt, ""};
  if (basis_type.edge_count() != 6) {
    rep.detail = "not a six-edge graph";
    return rep;
  }
  EdgeGraph canon = canonical_graph(basis_type);
  if (canon == canonical_graph(six_cycle_graph())) {
    // The hexagon determinant changes sign along an explicit positive path.
    RatVec base{Rational(1), Rational(3), Rational(4), Rational(7), Rational(8)};
    const EdgeGraph hexagon = six_cycle_graph();
    auto hex_det = [&](const Rational& f) {
      RatVec nodes = base;
      nodes.push_back(f);
      PositiveMatrix z = vandermonde(nodes, 4);
      LinearMatroid w = matroid_of(z, 2);
      std::vector<IntVec> rows;
      for (const auto& [a, b] : hexagon.edges()) rows.push_back(w.column(*w.ground_index({a, b})));
      return det_int(std::move(rows));
    };
    Int at_nine = hex_det(Rational(9));
    Int at_locus = hex_det(make_rational(47, 5));
    Int at_ten = hex_det(Rational(10));
    if (at_locus == 0 && sign_of(at_nine) * sign_of(at_ten) < 0) {
      rep.kind = StaticDynamicReport::Kind::DYNAMIC;
      RatVec witness = base;
      witness.push_back(make_rational(47, 5));
      rep.witness_nodes = witness;
      rep.detail = "determinant vanishes at the 47/5 node and changes sign across it";
    } else {
      rep.detail = "expected sign change across the 47/5 node was not observed";
    }
    return rep;
  }
  if (canon == canonical_graph(k4_graph())) {
    // Full automorphism group: one labeling suffices.
    SignPattern p = chart_sign_pattern(k4_graph(), {1, 2, 3, 4});
    if (p == SignPattern::ALL_POSITIVE || p == SignPattern::ALL_NEGATIVE) {
      rep.kind = StaticDynamicReport::Kind::STATIC;
      rep.symbolic_checks = 1;
      rep.detail = "single-signed determinant on the positive chart";
    }
    return rep;
  }
  if (canon == canonical_graph(house_graph())) {
    std::vector<int> labels{1, 2, 3, 4, 5};
    int checks = 0;
    do {
      SignPattern p = chart_sign_pattern(house_graph(), labels);
      if (p != SignPattern::ALL_POSITIVE && p != SignPattern::ALL_NEGATIVE) {
        rep.detail = "a labeling produced a mixed-sign determinant";
        return rep;
      }
      ++checks;
    } while (std::next_permutation(labels.begin(), labels.end()));
    rep.kind = StaticDynamicReport::Kind::STATIC;
    rep.symbolic_checks = checks;
    rep.detail = "single-signed determinants for all labelings";
    return rep;
  }
  if (poset_reachable_from(canon, {k4_graph(), house_graph()})) {
    rep.kind = StaticDynamicReport::Kind::STATIC;
    rep.detail = "cutting preserves static types; reachable from a static maximal type";
    return rep;
  }
  rep.detail = "not in the cut-closure of the static maximal types";
  return rep;
}

const std::vector<std::uint8_t>& positroid_table_4() {
  static const std::vector<std::uint8_t> table = [] {
    std::set<std::uint8_t> masks;
    constexpr int lo = -3, hi = 3;
    std::array<int, 4> a{}, b{};
    std::array<int, 8> cell{};
    cell.fill(lo);
    while (true) {
      for (int i = 0; i < 4; ++i) {
        a[i] = cell[i];
        b[i] = cell[4 + i];
      }
      bool ok = true;
      std::uint8_t mask = 0;
      int bit = 0;
      for (int i = 0; i < 4 && ok; ++i)
        for (int j = i + 1; j < 4; ++j, ++bit) {
          int minor = a[i] * b[j] - a[j] * b[i];
          if (minor < 0) {
            ok = false;
            break;
          }
          if (minor > 0) mask |= static_cast<std::uint8_t>(1u << bit);
        }
      if (ok) masks.insert(mask);
      int p = 7;
      while (p >= 0 && cell[p] == hi) cell[p--] = lo;
      if (p < 0) break;
      ++cell[p];
    }
    return std::vector<std::uint8_t>(masks.begin(), masks.end());
  }();
  return table;
}

std::uint8_t induced_pair_mask(const EdgeGraph& g, const Subset& s) {
  std::uint8_t mask = 0;
  int bit = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++bit)
      if (g.has_edge(s[i], s[j])) mask |= static_cast<std::uint8_t>(1u << bit);
  return mask;
}

namespace {

// The realizable patterns closed under vertex relabeling. The raw table is
// cyclic-order-exact; only arcs can carry parallel classes there, which
// would reject cliques on non-consecutive supports. The shape filter keeps
// the restriction test label-free, which is the form the clique
// characterization argues with; it stays a necessary condition.
const std::set<std::uint8_t>& positroid_shape_table_4() {
  static const std::set<std::uint8_t> shapes = [] {
    std::set<std::uint8_t> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    do {
      for (std::uint8_t mask : positroid_table_4()) {
        std::uint8_t image = 0;
        for (int bit = 0; bit < 6; ++bit) {
          if (!(mask & (1u << bit))) continue;
          int a = perm[pairs[bit].first], b = perm[pairs[bit].second];
          if (a > b) std::swap(a, b);
          for (int t = 0; t < 6; ++t)
            if (pairs[t] == std::make_pair(a, b)) image |= static_cast<std::uint8_t>(1u << t);
        }
        out.insert(image);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return shapes;
}

}  // namespace

bool passes_positroid_filter(const EdgeGraph& g, int n) {
  const auto& table = positroid_shape_table_4();
  for (const Subset& s : k_subsets(n, 4)) {
    if (!table.count(induced_pair_mask(g, s))) return false;
  }
  return true;
}

std::vector<EdgeGraph> positroid_circuit_search(int n, std::uint64_t seed) {
  if (n < 5 || n > 9) throw std::domain_error("positroid_circuit_search: n must be between 5 and 9");
  // Edge order grouped by larger endpoint, so pair restrictions complete early.
  std::vector<std::pair<int, int>> edges;
  for (int t = 2; t <= n; ++t)
    for (int i = 1; i < t; ++i) edges.emplace_back(i, t);
  const int m = static_cast<int>(edges.size());
  std::map<std::pair<int, int>, int> edge_pos;
  for (int i = 0; i < m; ++i) edge_pos[edges[i]] = i;

  // Four-subsets are filtered at the position where their last edge settles.
  std::vector<std::vector<Subset>> complete_at(m);
  for (const Subset& s : k_subsets(n, 4)) complete_at[edge_pos.at({s[2], s[3]})].push_back(s);

  std::vector<int> last_touch(n + 1, -1);
  for (int i = 0; i < m; ++i) {
    last_touch[edges[i].first] = i;
    last_touch[edges[i].second] = i;
  }

  const auto& table = positroid_shape_table_4();
  const int max_circuit = 2 * n - 2;  // rank of the dual plus one

  std::vector<bool> in_c(m, false);
  std::vector<int> deg(n + 1, 0);
  std::vector<std::vector<std::pair<int, int>>> candidates;
  int chosen = 0;

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      if (chosen == 0) return;
      std::vector<std::pair<int, int>> cedges;
      for (int i = 0; i < m; ++i)
        if (in_c[i]) cedges.push_back(edges[i]);
      candidates.push_back(std::move(cedges));
      return;
    }
    for (bool take : {false, true}) {
      if (take && chosen >= max_circuit) continue;
      in_c[pos] = take;
      if (take) {
        ++chosen;
        ++deg[edges[pos].first];
        ++deg[edges[pos].second];
      }
      bool ok = true;
      // Dual circuits have minimum degree at least three on their support.
      for (int v : {edges[pos].first, edges[pos].second})
        if (last_touch[v] == pos && deg[v] > 0 && deg[v] < 3) ok = false;
      if (ok) {
        for (const Subset& s : complete_at[pos]) {
          std::uint8_t mask = 0;
          int bit = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
              if (!in_c[edge_pos.at({s[i], s[j]})]) mask |= static_cast<std::uint8_t>(1u << bit);
          if (!table.count(mask)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) self(self, pos + 1);
      if (take) {
        --chosen;
        --deg[edges[pos].first];
        --deg[edges[pos].second];
      }
      in_c[pos] = false;
    }
  };
  rec(rec, 0);

  // Algebraic check in the dual: C is dependent iff its complement fails to
  // span the wedge matroid, minimal iff restoring any one element respans.
  LinearMatroid w = matroid_of(random_positive(n - 2, n, seed), 2);
  const int full = w.full_rank();
  std::vector<EdgeGraph> out;
  for (const auto& cedges : candidates) {
    std::set<std::pair<int, int>> cset(cedges.begin(), cedges.end());
    std::vector<int> complement;
    for (int i = 0; i < w.ground_size(); ++i) {
      const Subset& s = w.ground()[i];
      if (!cset.count({s[0], s[1]})) complement.push_back(i);
    }
    if (w.rank_of(complement) == full) continue;
    bool minimal = true;
    for (const auto& e : cedges) {
      std::vector<int> ext = complement;
      ext.push_back(*w.ground_index({e.first, e.second}));
      std::sort(ext.begin(), ext.end());
      if (w.rank_of(ext) != full) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(EdgeGraph(cedges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const LinearMatroid& cached_wedge_matroid(int m, int n, std::uint64_t seed) {
  static std::map<std::tuple<int, int, std::uint64_t>, LinearMatroid> cache;
  auto key = std::make_tuple(m, n, seed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, matroid_of(random_positive(2 + m, n, seed), 2)).first;
  return it->second;
}

}  // namespace

bool is_wedge_circuit(const EdgeGraph& g, int m, std::uint64_t seed) {
  auto vs = g.vertices();
  if (vs.empty()) return false;
  int n = std::max<int>(static_cast<int>(vs.size()), m + 3);
  std::map<int, int> relabel;
  int next = 1;
  for (int v : vs) relabel[v] = next++;
  const LinearMatroid& w = cached_wedge_matroid(m, n, seed);
  std::vector<int> idx;
  for (const auto& [a, b] : g.edges())
    idx.push_back(*w.ground_index({std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b])}));
  std::sort(idx.begin(), idx.end());
  if (w.rank_of(idx) != static_cast<int>(idx.size()) - 1) return false;
  for (size_t d = 0; d < idx.size(); ++d) {
    std::vector<int> sub;
    for (size_t i = 0; i < idx.size(); ++i)
      if (i != d) sub.push_back(idx[i]);
    if (w.rank_of(sub) != static_cast<int>(sub.size())) return false;
  }
  return true;
}

std::vector<EdgeGraph> circuit_unglue_preimages(const EdgeGraph& g, int m) {
  std::set<EdgeGraph> out;
  auto vs = g.vertices();
  int fresh = vs.back() + 1;
  for (int v : vs) {
    std::vector<std::pair<int, int>> at, rest;
    for (const auto& e : g.edges()) ((e.first == v || e.second == v) ? at : rest).push_back(e);
    int dv = static_cast<int>(at.size());
    if (dv < 2) continue;
    // Split the edges at v into two nonempty parts between v and a fresh
    // vertex; keep splits at distance three or more that stay circuits.
    for (unsigned mask = 1; mask + 1 < (1u << dv); ++mask) {
      std::vector<std::pair<int, int>> edges = rest;
      for (int i = 0; i < dv; ++i) {
        auto e = at[i];
        if (mask & (1u << i)) {
          if (e.first == v)
            e.first = fresh;
          else
            e.second = fresh;
        }
        edges.push_back(e);
      }
      EdgeGraph h(edges);
      int d = h.distance(v, fresh);
      if (d >= 0 && d < 3) continue;
      EdgeGraph c = canonical_graph(h);
      if (out.count(c)) continue;
      if (is_wedge_circuit(c, m, 17) && is_wedge_circuit(c, m, 18)) out.insert(c);
    }
  }
  return {out.begin(), out.end()};
}

EdgeGraph unglue_to_maximal(const EdgeGraph& g, int m) {
  EdgeGraph cur = canonical_graph(g);
  while (true) {
    auto pre = circuit_unglue_preimages(cur, m);
    if (pre.empty()) return cur;
    cur = pre.front();
  }
}

std::vector<CircuitFamily> w23_circuit_families() {
  std::vector<CircuitFamily> fams;
  fams.push_back({"five-star", star_graph(1, 2, 5), 6});
  fams.push_back({"complete-bipartite-three",
                  EdgeGraph({{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}), 6});
  fams.push_back({"clique-and-triangle",
                  EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 6}, {5, 7}, {6, 7}}), 7});
  fams.push_back({"two-cliques-minus-one-each",
                  EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}}), 8});
  fams.push_back({"clique-and-square",
                  EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}}), 8});
  fams.push_back({"double-four-star",
                  EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 7}, {6, 8}, {6, 9}, {6, 10}}), 10});
  fams.push_back({"star-and-two-triangles",
                  EdgeGraph({{1, 11}, {2, 11}, {3, 11}, {4, 11}, {5, 6}, {5, 7}, {6, 7}, {8, 9}, {8, 10}, {9, 10}}),
                  11});
  fams.push_back({"eleven-matching",
                  EdgeGraph({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 16}, {17, 18},
                             {19, 20}, {21, 22}}),
                  22});
  return fams;
}

std::vector<CircuitFamily> w22_circuit_families() {
  std::vector<CircuitFamily> fams;
  fams.push_back({"four-star", star_graph(1, 2, 4), 5});
  fams.push_back({"two-triangles", EdgeGraph({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}), 6});
  fams.push_back({"double-three-star", EdgeGraph({{1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}, {5, 8}}), 8});
  fams.push_back({"seven-matching",
                  EdgeGraph({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}}), 14});
  return fams;
}

}  // namespace exc
