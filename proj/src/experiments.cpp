#include "exc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "exc/amplituhedron.hpp"
#include "exc/matroid.hpp"

namespace exc {

namespace {

using Clock = std::chrono::steady_clock;

Json f_vector_json(const std::vector<long>& f) {
  Json a = Json::array();
  for (long x : f) a.push_back(x);
  return a;
}

std::vector<long> parse_fvec(std::initializer_list<long> xs) { return std::vector<long>(xs); }

PositiveMatrix nodes_matrix(std::initializer_list<long> nodes, int rows) {
  RatVec v;
  for (long x : nodes) v.emplace_back(x);
  return vandermonde(v, rows);
}

std::set<std::set<std::pair<int, int>>> facet_vertex_sets(const SchubertClassification& cls) {
  std::set<std::set<std::pair<int, int>>> out;
  for (const auto& f : cls.facets) {
    std::set<std::pair<int, int>> s;
    for (const Subset& v : f.vertices) s.emplace(v[0], v[1]);
    out.insert(std::move(s));
  }
  return out;
}

std::set<std::pair<int, int>> pair_set(std::initializer_list<std::pair<int, int>> xs) {
  return std::set<std::pair<int, int>>(xs);
}

// --- individual experiments -------------------------------------------------

ExperimentReport exp_table1(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "f-vectors of the k=2, m=2 exterior cyclic polytopes for n=5..9 are constant across positive matrices";
  const std::map<int, std::vector<long>> expected{
      {5, parse_fvec({10, 35, 55, 40, 12, 1})},  {6, parse_fvec({15, 75, 143, 111, 30, 1})},
      {7, parse_fvec({21, 147, 328, 282, 82, 1})}, {8, parse_fvec({28, 266, 664, 616, 192, 1})},
      {9, parse_fvec({36, 450, 1217, 1191, 390, 1})}};
  int n_hi = opt.quick ? 6 : 8;
  int seeds = opt.quick ? 1 : 3;
  rep.status = ExperimentReport::Status::PASS;
  Json obs = Json::object();
  for (int n = 5; n <= n_hi; ++n) {
    for (int s = 1; s <= seeds; ++s) {
      PositiveMatrix z = random_positive(4, n, opt.seed + s);
      auto f = exterior_cyclic_cone(z, 2).f_vector();
      obs["n=" + std::to_string(n) + " seed=" + std::to_string(s)] = f_vector_json(f);
      if (f != expected.at(n)) {
        rep.status = ExperimentReport::Status::FINDING;
        obs["witness n=" + std::to_string(n)] = matrix_to_json(z.matrix());
      }
    }
  }
  if (!opt.quick) {
    PositiveMatrix z9 = random_positive(4, 9, opt.seed + 1);
    auto f = exterior_cyclic_cone(z9, 2).f_vector();
    obs["n=9 seed=1"] = f_vector_json(f);
    if (f != expected.at(9)) {
      rep.status = ExperimentReport::Status::FINDING;
      obs["witness n=9"] = matrix_to_json(z9.matrix());
    }
  }
  Json exp = Json::object();
  for (const auto& [n, f] : expected) exp[std::to_string(n)] = f_vector_json(f);
  rep.expected = exp;
  rep.observed = obs;
  return rep;
}

ExperimentReport exp_c226_counts(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "the 6x15 wedge square on nodes (1,3,4,7,8,9) has 5005 six-subsets, 1660 zero minors, 3345 bases in 12 symmetry classes";
  LinearMatroid w = matroid_of(nodes_matrix({1, 3, 4, 7, 8, 9}, 4), 2);
  auto bases = w.bases();
  std::set<EdgeGraph> classes;
  for (const auto& b : bases) classes.insert(canonical_graph(w.subset_graph(b)));
  long total = 5005;
  rep.expected = Json{{"six_subsets", 5005}, {"zero_minors", 1660}, {"bases", 3345}, {"classes", 12}};
  rep.observed = Json{{"six_subsets", total},
                      {"zero_minors", total - static_cast<long>(bases.size())},
                      {"bases", bases.size()},
                      {"classes", classes.size()}};
  rep.status = (static_cast<long>(bases.size()) == 3345 && classes.size() == 12)
                   ? ExperimentReport::Status::PASS
                   : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_c226_facet_drift(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "across the node path (1,3,4,7,8,f) three simplex facets merge into a hexagonal facet at f=47/5 and reappear as three others, with equal f-vectors on the two sides";
  auto build = [&](const Rational& f) {
    RatVec nodes{Rational(1), Rational(3), Rational(4), Rational(7), Rational(8), f};
    return classify_facets(vandermonde(nodes, 4), 2);
  };
  SchubertClassification at9 = build(Rational(9));
  SchubertClassification at_locus = build(make_rational(47, 5));
  SchubertClassification at10 = build(Rational(10));

  auto sets9 = facet_vertex_sets(at9), sets_locus = facet_vertex_sets(at_locus), sets10 = facet_vertex_sets(at10);
  std::vector<std::set<std::pair<int, int>>> low_trio{
      pair_set({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
      pair_set({{1, 2}, {2, 3}, {3, 4}, {5, 6}, {1, 6}}),
      pair_set({{1, 2}, {1, 6}, {3, 4}, {4, 5}, {5, 6}})};
  std::vector<std::set<std::pair<int, int>>> high_trio{
      pair_set({{1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}}),
      pair_set({{1, 2}, {1, 6}, {2, 3}, {4, 5}, {5, 6}}),
      pair_set({{1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})};
  auto hexagon = pair_set({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});

  bool ok = true;
  for (const auto& s : low_trio) ok = ok && sets9.count(s) && !sets_locus.count(s) && !sets10.count(s);
  for (const auto& s : high_trio) ok = ok && sets10.count(s) && !sets_locus.count(s) && !sets9.count(s);
  ok = ok && sets_locus.count(hexagon) && !sets9.count(hexagon) && !sets10.count(hexagon);

  auto f9 = at9.cone.f_vector(), f10 = at10.cone.f_vector();
  ok = ok && (f9 == f10);

  // The merged facet is combinatorially a cyclic polytope: face counts
  // (6, 15, 18, 9) below it in the lattice.
  std::vector<long> hex_counts(5, 0);
  {
    int hex_index = -1;
    for (const auto& fc : at_locus.facets) {
      std::set<std::pair<int, int>> s;
      for (const Subset& v : fc.vertices) s.emplace(v[0], v[1]);
      if (s == hexagon) hex_index = fc.facet_index;
    }
    if (hex_index < 0) {
      ok = false;
    } else {
      Bitset mask = at_locus.cone.incidence()[hex_index];
      for (const auto& [face, d] : at_locus.cone.face_lattice().faces)
        if (d <= 4 && face.is_subset_of(mask)) ++hex_counts[d];
    }
  }
  ok = ok && hex_counts[1] == 6 && hex_counts[2] == 15 && hex_counts[3] == 18 && hex_counts[4] == 9;

  rep.expected = Json{{"facet_substitution", true},
                      {"equal_f_vectors", true},
                      {"hexagon_face_counts", Json::array({6, 15, 18, 9})}};
  rep.observed = Json{{"f_vector_low", f_vector_json(f9)},
                      {"f_vector_high", f_vector_json(f10)},
                      {"facets_at_locus", at_locus.cone.facets().size()},
                      {"hexagon_face_counts",
                       Json::array({hex_counts[1], hex_counts[2], hex_counts[3], hex_counts[4]})}};
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_basis_classes(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "bases at n=6 fall into 12 isomorphism classes; the cut poset carries 47 basis types in total";
  LinearMatroid w = matroid_of(nodes_matrix({1, 3, 4, 7, 8, 9}, 4), 2);
  std::set<EdgeGraph> classes;
  for (const auto& b : w.bases()) classes.insert(canonical_graph(w.subset_graph(b)));
  BasisTypePoset poset = basis_type_poset();
  rep.expected = Json{{"classes_n6", 12}, {"types", 47}};
  rep.observed = Json{{"classes_n6", classes.size()}, {"types", poset.nodes.size()}};
  bool contained = true;
  for (const auto& g : classes)
    if (std::find(poset.nodes.begin(), poset.nodes.end(), g) == poset.nodes.end()) contained = false;
  rep.observed["n6_classes_among_types"] = contained;
  rep.status = (classes.size() == 12 && poset.nodes.size() == 47 && contained) ? ExperimentReport::Status::PASS
                                                                               : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_basis_poset(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "the cut poset of basis types has 47 nodes, exactly three maximal ones, and is generated from them";
  BasisTypePoset poset = basis_type_poset();
  std::set<int> targets;
  for (const auto& [a, b] : poset.covers) targets.insert(b);
  std::vector<int> maximal_observed;
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    if (!targets.count(static_cast<int>(i))) maximal_observed.push_back(static_cast<int>(i));
  bool maximal_match = maximal_observed == poset.maximal ||
                       std::set<int>(maximal_observed.begin(), maximal_observed.end()) ==
                           std::set<int>(poset.maximal.begin(), poset.maximal.end());
  // Every non-maximal node must be someone's cut (generation is by
  // construction; this checks the cover relation covers all of them).
  bool generated = true;
  for (size_t i = 0; i < poset.nodes.size(); ++i) {
    bool is_max = std::find(poset.maximal.begin(), poset.maximal.end(), static_cast<int>(i)) != poset.maximal.end();
    if (!is_max && !targets.count(static_cast<int>(i))) generated = false;
  }
  rep.expected = Json{{"nodes", 47}, {"maximal", 3}};
  rep.observed = Json{{"nodes", poset.nodes.size()}, {"maximal", maximal_observed.size()},
                      {"covers", poset.covers.size()}, {"generated", generated}};
  rep.status = (poset.nodes.size() == 47 && maximal_observed.size() == 3 && maximal_match && generated)
                   ? ExperimentReport::Status::PASS
                   : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_theorem_4_10(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "the clique and house basis types are static with single-signed chart determinants; the hexagon is dynamic with an explicit witness";
  StaticDynamicReport k4 = static_or_dynamic(k4_graph());
  StaticDynamicReport house = static_or_dynamic(house_graph());
  StaticDynamicReport cyc = static_or_dynamic(six_cycle_graph());
  bool ok = k4.kind == StaticDynamicReport::Kind::STATIC && k4.symbolic_checks == 1 &&
            house.kind == StaticDynamicReport::Kind::STATIC && house.symbolic_checks == 120 &&
            cyc.kind == StaticDynamicReport::Kind::DYNAMIC && cyc.witness_nodes.has_value();
  rep.expected = Json{{"clique", "STATIC"}, {"house", "STATIC x120"}, {"hexagon", "DYNAMIC"}};
  Json witness = Json::array();
  if (cyc.witness_nodes)
    for (const auto& q : *cyc.witness_nodes) witness.push_back(rational_to_string(q));
  rep.observed = Json{{"clique_checks", k4.symbolic_checks},
                      {"house_checks", house.symbolic_checks},
                      {"hexagon_detail", cyc.detail},
                      {"hexagon_witness_nodes", witness}};
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_schubert_n6(const ExperimentOptions&) {
  ExperimentReport rep;
  rep.claim = "the n=6 polytope has 30 facets: Schubert ones split (6,6,3) by cyclic gap and 15 non-Schubert simplices";
  PositiveMatrix z = nodes_matrix({1, 3, 4, 7, 8, 9}, 4);
  SchubertClassification cls = classify_facets(z, 2);
  std::map<IntVec, std::pair<int, int>, bool (*)(const IntVec&, const IntVec&)> bar_pairs(intvec_less);
  {
    int n = z.cols();
    PositiveMatrix w = twist(z, 2, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ExteriorVector line = wedge(ExteriorVector::from_vector(w.matrix().column(i - 1)),
                                    ExteriorVector::from_vector(w.matrix().column(j - 1)));
        bar_pairs[primitive_int_vector(line.dense())] = {i, j};
      }
  }
  std::map<int, int> gap_counts;
  int non_schubert = 0, non_schubert_simplices = 0, seven_vertex = 0, nine_vertex = 0;
  for (const auto& f : cls.facets) {
    if (f.kind == FacetKind::SCHUBERT) {
      auto it = bar_pairs.find(f.facet_vector);
      if (it != bar_pairs.end()) {
        int gap = std::min(it->second.second - it->second.first, 6 - (it->second.second - it->second.first));
        ++gap_counts[gap];
      }
    } else {
      ++non_schubert;
      if (f.vertices.size() == 5) ++non_schubert_simplices;
    }
    if (f.vertices.size() == 7) ++seven_vertex;
    if (f.vertices.size() == 9) ++nine_vertex;
  }
  bool pinned_pyramid = facet_vertex_sets(cls).count(
      pair_set({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {5, 6}}));
  bool ok = cls.facets.size() == 30 && gap_counts[1] == 6 && gap_counts[2] == 6 && gap_counts[3] == 3 &&
            non_schubert == 15 && non_schubert_simplices == 15 && seven_vertex == 6 && pinned_pyramid;
  rep.expected = Json{{"facets", 30}, {"gap_counts", Json::array({6, 6, 3})}, {"non_schubert_simplices", 15}};
  rep.observed = Json{{"facets", cls.facets.size()},
                      {"gap_counts", Json::array({gap_counts[1], gap_counts[2], gap_counts[3]})},
                      {"non_schubert", non_schubert},
                      {"double_pyramids", seven_vertex},
                      {"nine_vertex_facets", nine_vertex},
                      {"pinned_pyramid_present", pinned_pyramid}};
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_schubert_theorem(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "for n=5..8 the Schubert facet vectors are exactly the twist lines, which meet transversally";
  int n_hi = opt.quick ? 6 : 8;
  int seeds = opt.quick ? 1 : 3;
  bool ok = true;
  Json obs = Json::object();
  for (int n = 5; n <= n_hi; ++n)
    for (int s = 1; s <= seeds; ++s) {
      PositiveMatrix z = random_positive(4, n, opt.seed + 10 * n + s);
      SchubertClassification cls = classify_facets(z, 2);
      std::vector<IntVec> schubert;
      for (const auto& f : cls.facets)
        if (f.kind == FacetKind::SCHUBERT) schubert.push_back(f.facet_vector);
      std::sort(schubert.begin(), schubert.end(), intvec_less);
      bool match = schubert == predicted_schubert_normals(z);
      // Transversality: every quadruple of twist columns has nonzero minor.
      PositiveMatrix w = twist(z, 2, 2);
      bool transversal = true;
      std::vector<int> rows{0, 1, 2, 3};
      for (const Subset& q : k_subsets(n, 4)) {
        std::vector<int> colsel;
        for (int c : q) colsel.push_back(c - 1);
        if (det(w.matrix().select(rows, colsel)) == 0) transversal = false;
      }
      obs["n=" + std::to_string(n) + " seed=" + std::to_string(s)] =
          Json{{"match", match}, {"transversal", transversal}, {"schubert", schubert.size()}};
      ok = ok && match && transversal;
    }
  rep.expected = Json{{"match", true}, {"transversal", true}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_twist_duality(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the Schubert cone of z equals the dual of the cone of the twist, with the vertex identity on the Grassmannian; the (3,2) normals are triple twist wedges";
  int n_hi = opt.quick ? 6 : 8;
  int seeds = opt.quick ? 1 : 3;
  bool ok = true;
  Json obs = Json::object();
  for (int n = 5; n <= n_hi; ++n)
    for (int s = 1; s <= seeds; ++s) {
      PositiveMatrix z = random_positive(4, n, opt.seed + 100 * n + s);
      TwistDualityReport r = twist_duality_check(z);
      obs["n=" + std::to_string(n) + " seed=" + std::to_string(s)] =
          Json{{"cones_equal", r.cones_equal},
               {"vertex_identity", r.vertex_identity},
               {"normals_predicted", r.normals_are_predicted}};
      ok = ok && r.cones_equal && r.vertex_identity && r.normals_are_predicted;
    }
  bool triple = schubert_normals_are_triple_wedges(random_positive(5, 6, opt.seed + 5));
  bool consec_226 = consecutive_facets_present(nodes_matrix({1, 2, 3, 4, 5, 6}, 4), 2);
  bool consec_326 = consecutive_facets_present(nodes_matrix({1, 2, 3, 4, 5, 6}, 5), 3);
  bool consec_215 = consecutive_facets_present(nodes_matrix({1, 2, 3, 4, 5}, 3), 2);
  obs["triple_wedges_32_n6"] = triple;
  obs["consecutive_facets"] = Json::array({consec_226, consec_326, consec_215});
  rep.expected = Json{{"cones_equal", true}, {"vertex_identity", true}, {"triple_wedges", true}};
  rep.observed = obs;
  if (!ok)
    rep.status = ExperimentReport::Status::FAIL;
  else if (!(triple && consec_226 && consec_326 && consec_215))
    rep.status = ExperimentReport::Status::FINDING;  // higher-(k,m) evidence, reported not asserted
  else
    rep.status = ExperimentReport::Status::PASS;
  return rep;
}

ExperimentReport exp_c326(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the (3,2) polytope at n=6 has the stated ten-entry f-vector, 20 Schubert facets of sizes 16/14/12, and its Schubert cone shares the f-vector of its dual";
  PositiveMatrix z = random_positive(5, 6, opt.seed);
  SchubertClassification cls = classify_facets(z, 3);
  std::vector<long> expect_f = parse_fvec({20, 160, 675, 1659, 2469, 2227, 1173, 327, 38, 1});
  auto f = cls.cone.f_vector();
  std::map<size_t, int> schubert_sizes;
  for (const auto& fc : cls.facets)
    if (fc.kind == FacetKind::SCHUBERT) ++schubert_sizes[fc.vertices.size()];
  int schubert = cls.schubert_count();
  std::vector<int> keep;
  for (const auto& fc : cls.facets)
    if (fc.kind == FacetKind::SCHUBERT) keep.push_back(fc.facet_index);
  auto tilde_f = cls.cone.delete_facets(keep).f_vector();
  auto dual_f = cls.cone.dual().f_vector();
  bool ok = f == expect_f && cls.facets.size() == 38 && schubert == 20 && schubert_sizes[16] == 6 &&
            schubert_sizes[14] == 12 && schubert_sizes[12] == 2 && tilde_f == dual_f;
  rep.expected = Json{{"f_vector", f_vector_json(expect_f)},
                      {"schubert", 20},
                      {"schubert_sizes", Json{{"16", 6}, {"14", 12}, {"12", 2}}}};
  Json sizes = Json::object();
  for (const auto& [sz, c] : schubert_sizes) sizes[std::to_string(sz)] = c;
  rep.observed = Json{{"f_vector", f_vector_json(f)},
                      {"facets", cls.facets.size()},
                      {"schubert", schubert},
                      {"schubert_sizes", sizes},
                      {"schubert_cone_f", f_vector_json(tilde_f)},
                      {"dual_f", f_vector_json(dual_f)}};
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_positroid_circuits(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the positroid-filtered circuits of the degree-two hyperconnectivity dual are exactly the 4-cliques";
  int n_hi = opt.quick ? 6 : 8;
  bool ok = true;
  Json obs = Json::object();
  for (int n = 5; n <= n_hi; ++n) {
    auto circuits = positroid_circuit_search(n, opt.seed);
    bool all_k4 = true;
    std::set<std::vector<int>> supports;
    for (const auto& g : circuits) {
      if (!(canonical_graph(g) == canonical_graph(k4_graph()))) all_k4 = false;
      supports.insert(g.vertices());
    }
    long expect_count = static_cast<long>(binomial(n, 4).get_si());
    obs["n=" + std::to_string(n)] =
        Json{{"count", circuits.size()}, {"expected", expect_count}, {"all_4_cliques", all_k4}};
    ok = ok && all_k4 && static_cast<long>(circuits.size()) == expect_count &&
         static_cast<long>(supports.size()) == expect_count;
  }
  rep.expected = Json{{"all_4_cliques", true}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_linear_boundaries(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "every facet passing the positroid restriction filter misses exactly the pairs of a 4-clique";
  bool ok = true;
  Json obs = Json::object();
  std::vector<int> ns = opt.quick ? std::vector<int>{6} : std::vector<int>{6, 7, 8};
  if (opt.n >= 6 && opt.n <= 8) ns = {opt.n};
  for (int n : ns) {
    PositiveMatrix z = random_positive(n - 2, n, opt.seed + n);
    BoundaryAuditReport audit = linear_boundary_audit(z);
    obs["n=" + std::to_string(n)] = Json{{"facets", audit.facets.size()},
                                         {"passing", audit.passing},
                                         {"all_passing_are_clique_complements",
                                          audit.all_passing_are_clique_complements}};
    ok = ok && audit.all_passing_are_clique_complements && audit.passing > 0;
  }
  rep.expected = Json{{"all_passing_are_clique_complements", true}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_separation(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the bar-expansion image of every pair generator pairs nonpositively with the distance-two support vector";
  bool ok = true;
  Json obs = Json::object();
  int n_lo = 5, n_hi = opt.quick ? 6 : 9;
  if (opt.n >= 5 && opt.n <= 9) n_lo = n_hi = opt.n;
  long seeds = opt.quick ? 5 : 50;
  for (int n = n_lo; n <= n_hi; ++n) {
    long good = 0;
    for (long s = 0; s < seeds; ++s) {
      PositiveMatrix z = random_positive(4, n, opt.seed + 1000 * n + s);
      if (separation_certificate(z).separated) ++good;
    }
    obs["n=" + std::to_string(n)] = Json{{"separated", good}, {"of", seeds}};
    ok = ok && good == seeds;
  }
  rep.expected = Json{{"separated_all", true}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_oracle_equivalence(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "bar membership, cone containment, and the two-flip description agree on random Grassmannian points away from boundaries";
  long trials = opt.quick ? 250 : opt.trials;
  long hull_samples = opt.quick ? 40 : 1000;
  bool ok = true;
  Json obs = Json::object();
  int n_lo = 4, n_hi = opt.quick ? 5 : 8;
  if (opt.n >= 4 && opt.n <= 8) n_lo = n_hi = opt.n;
  for (int n = n_lo; n <= n_hi; ++n) {
    PositiveMatrix z = random_positive(4, n, opt.seed + n);
    auto bars = predicted_schubert_normals(z);
    PointedCone cone = exterior_cyclic_cone(z, 2);
    SplitMix64 rng(opt.seed * 77 + n);
    long disagreements = 0, boundary = 0;
    std::set<std::vector<int>> chambers;
    for (long t = 0; t < trials; ++t) {
      GrassmannPoint y = random_grassmann_point(2, 4, rng);
      Verdict vb = member_bar(y, bars);
      Verdict vc = member_cone(y, cone);
      Verdict vs = member_signflip(y, z, 2);
      if (vb == Verdict::BOUNDARY || vc == Verdict::BOUNDARY || vs == Verdict::BOUNDARY) {
        ++boundary;
        continue;
      }
      if (!(vb == vc && vc == vs)) ++disagreements;
      std::vector<int> chamber;
      RatVec yd = y.plucker.dense();
      for (const auto& b : bars) {
        Rational v = 0;
        for (size_t i = 0; i < yd.size(); ++i)
          if (b[i] != 0) v += yd[i] * Rational(b[i]);
        chamber.push_back(sign_of(v));
      }
      chambers.insert(std::move(chamber));
    }
    long hull_pass = 0;
    for (long t = 0; t < hull_samples; ++t) {
      GrassmannPoint y = sample_amplituhedron(z, 2, opt.seed * 131 + t);
      if (member_bar(y, bars) != Verdict::OUT && member_cone(y, cone) != Verdict::OUT &&
          member_signflip(y, z, 2) != Verdict::OUT)
        ++hull_pass;
    }
    // Heuristic connectivity probe, reported but never asserted: from each
    // member, walk the explicit curve through a vertex that stays on the
    // Grassmannian, and count how many intermediate points remain members.
    long curve_points = 0, curve_members = 0;
    {
      SplitMix64 crng(opt.seed * 913 + n);
      auto vertex_wedge = [&](int i, int j) {
        return wedge(ExteriorVector::from_vector(z.matrix().column(i - 1)),
                     ExteriorVector::from_vector(z.matrix().column(j - 1)));
      };
      ExteriorVector v12 = vertex_wedge(1, 2);
      int probes = 0;
      while (probes < (opt.quick ? 3 : 20)) {
        GrassmannPoint y = random_grassmann_point(2, 4, crng);
        if (member_bar(y, bars) != Verdict::IN) continue;
        ++probes;
        // Some pair bracket is negative on the member region; find one
        // avoiding the first two columns.
        int ni = 0, nj = 0;
        Rational yij;
        for (int i = 3; i <= n && !ni; ++i)
          for (int j = i + 1; j <= n; ++j) {
            Rational b = y_bracket(y, z, i, j);
            if (b < 0) {
              ni = i;
              nj = j;
              yij = b;
              break;
            }
          }
        if (!ni) continue;
        ExteriorVector vij = vertex_wedge(ni, nj);
        Rational y12 = y_bracket(y, z, 1, 2);
        Rational v12ij = top_pair(v12, vij);
        for (long num : {1L, 2L, 4L}) {
          Rational beta = make_rational(num, 2);
          Rational denom = v12ij + beta * y12;
          if (denom == 0) continue;
          Rational alpha = -(beta * yij) / denom;
          ExteriorVector p = v12 * alpha + vij + y.plucker * beta;
          if (top_pair(p, p) != 0) continue;  // stay on the quadric
          ++curve_points;
          RatVec pd = p.dense();
          bool member = true;
          for (const auto& b : bars) {
            Rational val = 0;
            for (size_t ii = 0; ii < pd.size(); ++ii)
              if (b[ii] != 0) val += pd[ii] * Rational(b[ii]);
            if (val < 0) {
              member = false;
              break;
            }
          }
          if (member) ++curve_members;
        }
      }
    }
    obs["n=" + std::to_string(n)] = Json{{"trials", trials},
                                         {"disagreements", disagreements},
                                         {"boundary_skipped", boundary},
                                         {"sign_chambers_hit", chambers.size()},
                                         {"image_samples_passing", hull_pass},
                                         {"image_samples", hull_samples},
                                         {"connectivity_curve_points", curve_points},
                                         {"connectivity_curve_members", curve_members}};
    ok = ok && disagreements == 0 && hull_pass == hull_samples;
  }
  rep.expected = Json{{"disagreements", 0}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_dual_amplituhedron(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the zero-flip description against z agrees with twisted bar membership at the orthogonal complement";
  long trials = opt.quick ? 250 : opt.trials;
  bool ok = true;
  Json obs = Json::object();
  int n_lo = 5, n_hi = opt.quick ? 6 : 8;
  if (opt.n >= 5 && opt.n <= 8) n_lo = n_hi = opt.n;
  for (int n = n_lo; n <= n_hi; ++n) {
    PositiveMatrix z = random_positive(4, n, opt.seed + 31 * n);
    PositiveMatrix w = twist(z, 2, 2);
    auto bars_of_w = predicted_schubert_normals(w);
    SplitMix64 rng(opt.seed * 991 + n);
    long disagreements = 0, boundary = 0, members = 0;
    for (long t = 0; t < trials; ++t) {
      GrassmannPoint y = random_grassmann_point(2, 4, rng);
      Verdict vd = member_dual(y, z);
      // The convex dual is taken through the standard inner product, so the
      // twisted membership is read at the orthogonal complement of y.
      Verdict vb = member_bar(orthogonal_complement_point(y), bars_of_w);
      if (vd == Verdict::BOUNDARY || vb == Verdict::BOUNDARY) {
        ++boundary;
        continue;
      }
      if (vd != vb) ++disagreements;
      if (vd == Verdict::IN) ++members;
    }
    obs["n=" + std::to_string(n)] = Json{{"trials", trials},
                                         {"disagreements", disagreements},
                                         {"boundary_skipped", boundary},
                                         {"members_hit", members}};
    ok = ok && disagreements == 0;
  }
  rep.expected = Json{{"disagreements", 0}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_w23n_circuits(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "each frozen circuit family is a genuine circuit of the degree-two wedge matroid at its smallest n, for m=3 and m=2 alike";
  bool ok = true;
  Json obs = Json::object();
  auto verify = [&](const EdgeGraph& g, int m, int n, std::uint64_t seed) {
    LinearMatroid w = matroid_of(random_positive(2 + m, n, seed), 2);
    std::vector<int> idx;
    for (const auto& [a, b] : g.edges()) {
      auto gi = w.ground_index({a, b});
      if (!gi) return false;
      idx.push_back(*gi);
    }
    std::sort(idx.begin(), idx.end());
    if (w.rank_of(idx) != static_cast<int>(idx.size()) - 1) return false;
    for (size_t d = 0; d < idx.size(); ++d) {
      std::vector<int> sub;
      for (size_t i = 0; i < idx.size(); ++i)
        if (i != d) sub.push_back(idx[i]);
      if (w.rank_of(sub) != static_cast<int>(sub.size())) return false;
    }
    return true;
  };
  for (const auto& fam : w23_circuit_families()) {
    bool good = verify(fam.graph, 3, fam.min_n, opt.seed + 1) && verify(fam.graph, 3, fam.min_n, opt.seed + 2);
    bool maximal = circuit_unglue_preimages(fam.graph, 3).empty();
    obs[fam.name] =
        Json{{"min_n", fam.min_n}, {"edges", fam.graph.edge_count()}, {"circuit", good}, {"glue_maximal", maximal}};
    ok = ok && good && maximal;
  }
  for (const auto& fam : w22_circuit_families()) {
    bool good = verify(fam.graph, 2, fam.min_n, opt.seed + 3) && verify(fam.graph, 2, fam.min_n, opt.seed + 4);
    bool maximal = circuit_unglue_preimages(fam.graph, 2).empty();
    obs["m2 " + fam.name] = Json{{"circuit", good}, {"glue_maximal", maximal}};
    ok = ok && good && maximal;
  }
  // Completeness at small n: every circuit class un-glues to one of the
  // frozen families, hence is an iterated gluing of it.
  auto family_reachability = [&](int m, int n) {
    LinearMatroid w = matroid_of(random_positive(2 + m, n, 99), 2);
    std::set<EdgeGraph> classes;
    for (const auto& c : w.circuits(w.full_rank() + 1)) classes.insert(canonical_graph(w.subset_graph(c)));
    std::set<EdgeGraph> family_set;
    for (const auto& fam : (m == 3 ? w23_circuit_families() : w22_circuit_families()))
      family_set.insert(canonical_graph(fam.graph));
    long reached = 0;
    for (const auto& cls : classes)
      if (family_set.count(unglue_to_maximal(cls, m))) ++reached;
    return Json{{"classes", classes.size()}, {"reach_a_family", reached}};
  };
  Json reach_m3 = family_reachability(3, 6);
  Json reach_m2a = family_reachability(2, 5);
  Json reach_m2b = family_reachability(2, 6);
  obs["upto_gluing m3 n=6"] = reach_m3;
  obs["upto_gluing m2 n=5"] = reach_m2a;
  obs["upto_gluing m2 n=6"] = reach_m2b;
  ok = ok && reach_m3["classes"] == reach_m3["reach_a_family"] && reach_m2a["classes"] == reach_m2a["reach_a_family"] &&
       reach_m2b["classes"] == reach_m2b["reach_a_family"];
  rep.expected = Json{{"all_families_are_circuits", true}, {"all_small_classes_reach_a_family", true}};
  rep.observed = obs;
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

ExperimentReport exp_appendix_b_nonexample(const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.claim = "the nineteen-edge flat on fifteen points has corank one and a non-decomposable normal";
  PositiveMatrix z = random_positive(5, 15, opt.seed);
  LinearMatroid w = matroid_of(z, 2);
  std::vector<std::pair<int, int>> edges;
  for (int j = 2; j <= 15; ++j) edges.emplace_back(1, j);
  edges.emplace_back(6, 7);
  edges.emplace_back(8, 9);
  edges.emplace_back(10, 11);
  edges.emplace_back(12, 13);
  edges.emplace_back(14, 15);
  std::vector<int> idx;
  for (const auto& [a, b] : edges) idx.push_back(*w.ground_index({a, b}));
  std::sort(idx.begin(), idx.end());
  int r = w.rank_of(idx);
  bool is_flat = w.closure(idx) == idx;
  // Contains the five-star circuit on the first vertex.
  std::vector<int> star;
  for (int j = 2; j <= 6; ++j) star.push_back(*w.ground_index({1, j}));
  bool has_star_circuit = w.rank_of(star) == 4;
  // Normal: the one functional vanishing on the span of the flat.
  RatMatrix span(static_cast<int>(idx.size()), 10);
  for (size_t i = 0; i < idx.size(); ++i) {
    const IntVec& col = w.column(idx[i]);
    for (int c = 0; c < 10; ++c) span.at(static_cast<int>(i), c) = Rational(col[c]);
  }
  RatMatrix ker = kernel_basis(span);
  bool corank_one = (r == 9) && (ker.rows() == 1);
  bool decomposable = true;
  if (corank_one) {
    ExteriorVector normal = functional_to_exterior(ker.row(0), 2, 5);
    decomposable = is_decomposable(normal);
  }
  bool ok = is_flat && corank_one && has_star_circuit && !decomposable;
  rep.expected = Json{{"rank", 9}, {"flat", true}, {"normal_decomposable", false}};
  rep.observed = Json{{"rank", r},
                      {"flat", is_flat},
                      {"contains_five_star_circuit", has_star_circuit},
                      {"normal_decomposable", decomposable}};
  rep.status = ok ? ExperimentReport::Status::PASS : ExperimentReport::Status::FAIL;
  return rep;
}

using Runner = std::function<ExperimentReport(const ExperimentOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg = {
      {"table1", exp_table1},
      {"c226-counts", exp_c226_counts},
      {"c226-facet-drift", exp_c226_facet_drift},
      {"basis-classes", exp_basis_classes},
      {"basis-poset", exp_basis_poset},
      {"theorem-4-10", exp_theorem_4_10},
      {"schubert-n6", exp_schubert_n6},
      {"schubert-theorem-k2m2", exp_schubert_theorem},
      {"twist-duality", exp_twist_duality},
      {"c326", exp_c326},
      {"positroid-circuits", exp_positroid_circuits},
      {"linear-boundaries", exp_linear_boundaries},
      {"separation", exp_separation},
      {"oracle-equivalence", exp_oracle_equivalence},
      {"dual-amplituhedron", exp_dual_amplituhedron},
      {"w23n-circuits", exp_w23n_circuits},
      {"appendixB-nonexample", exp_appendix_b_nonexample},
  };
  return reg;
}

}  // namespace

Json ExperimentReport::to_json() const {
  Json params = Json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  // Wall time stays on the stderr summary so that identical (command,
  // flags, seed) runs produce byte-identical JSON.
  std::string st = status == Status::PASS ? "PASS" : status == Status::FAIL ? "FAIL" : "FINDING";
  return Json{{"name", name},   {"claim", claim},       {"parameters", std::move(params)},
              {"status", st},   {"expected", expected}, {"observed", observed}};
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    auto t0 = Clock::now();
    ExperimentReport rep = fn(opt);
    rep.name = name;
    rep.parameters["seed"] = std::to_string(opt.seed);
    rep.parameters["trials"] = std::to_string(opt.trials);
    if (opt.n) rep.parameters["n"] = std::to_string(opt.n);
    if (opt.quick) rep.parameters["quick"] = "true";
    rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
  }
  std::string names;
  for (const auto& n : experiment_names()) names += n + " ";
  throw std::domain_error("unknown experiment '" + name + "'; registry: " + names);
}

}  // namespace exc
