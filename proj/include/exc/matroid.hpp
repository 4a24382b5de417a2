#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "exc/graphs.hpp"
#include "exc/multipoly.hpp"
#include "exc/twistor.hpp"

namespace exc {

// Linear matroid of a labeled column configuration, with an exact rank
// oracle. Ground elements are k-subset labels; for k=2 they are read as
// edges of the complete graph on [n].
class LinearMatroid {
 public:
  LinearMatroid(std::vector<Subset> ground, const RatMatrix& columns);

  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<Subset>& ground() const { return ground_; }
  int ambient_dim() const { return dim_; }
  int full_rank() const;

  // Subsets are index lists into the ground set (0-based, ascending).
  int rank_of(const std::vector<int>& subset) const;
  bool independent(const std::vector<int>& subset) const;
  std::vector<int> closure(const std::vector<int>& subset) const;

  // All maximal independent sets; guarded to ground sizes <= 20.
  std::vector<std::vector<int>> bases() const;

  // All circuits of size <= max_size, by extending independent sets.
  std::vector<std::vector<int>> circuits(int max_size) const;

  // All rank-(r-1) flats: closures of independent (r-1)-subsets; <= 40.
  std::vector<std::vector<int>> hyperplane_flats() const;

  // Edge-graph view of a ground subset (k = 2 only).
  EdgeGraph subset_graph(const std::vector<int>& subset) const;
  std::optional<int> ground_index(const Subset& label) const;

  const IntVec& column(int i) const { return cols_[i]; }

 private:
  std::vector<Subset> ground_;
  std::vector<IntVec> cols_;  // primitive integer columns
  int dim_;
};

// Linear matroid of the k-th wedge power of z, ground set the lex k-subsets.
LinearMatroid matroid_of(const PositiveMatrix& z, int k);

// Classification of a 6-edge basis type of the k=2, m=2 wedge matroid. A
// type is static when the wedge-column determinant keeps one sign over all
// positive matrices, dynamic when an explicit positive witness changes it.
struct StaticDynamicReport {
  enum class Kind { STATIC, DYNAMIC, UNKNOWN } kind;
  int symbolic_checks = 0;          // single-signed determinants verified
  std::optional<RatVec> witness_nodes;  // dynamic: vandermonde nodes with sign change
  std::string detail;
};

StaticDynamicReport static_or_dynamic(const EdgeGraph& basis_type);

// Basis-set patterns of positroids of rank <= 2 on four cyclically ordered
// elements, as edge masks over the six pairs in lex order. Derived by brute
// force over small integer 2x4 matrices with nonnegative ordered minors.
const std::vector<std::uint8_t>& positroid_table_4();

// Edge mask of pairs within {1..4} after order-preserving relabeling of s.
std::uint8_t induced_pair_mask(const EdgeGraph& g, const Subset& s);

// True when every induced 4-element restriction of g (as the basis pattern
// of a rank-2 matroid on [n]) appears in the positroid table.
bool passes_positroid_filter(const EdgeGraph& g, int n);

// All circuits C of the dual of the k=2, m=n-4 wedge matroid such that the
// complement of C passes the positroid filter; pruned by the minimum-degree
// bound for such circuits. Expected output: the K4 subgraphs.
std::vector<EdgeGraph> positroid_circuit_search(int n, std::uint64_t seed = 2024);

// Circuit oracle on labeled graphs: relabels the support into [n] and tests
// dependence plus minimality against a cached generic wedge matroid.
bool is_wedge_circuit(const EdgeGraph& g, int m, std::uint64_t seed);

// One-step un-gluings of g (vertex splits at distance three or more) that
// are again circuits of the k=2 wedge matroid with m as given.
std::vector<EdgeGraph> circuit_unglue_preimages(const EdgeGraph& g, int m);

// Follow un-gluings until no circuit preimage remains; the result is a
// glue-maximal circuit whose gluings include g.
EdgeGraph unglue_to_maximal(const EdgeGraph& g, int m);

// Glue-maximal circuit families of the degree-two wedge matroids, each at
// the smallest n admitting it. Derived by exhaustive enumeration at small n
// followed by un-gluing to maximality.
struct CircuitFamily {
  std::string name;
  EdgeGraph graph;
  int min_n;
};
std::vector<CircuitFamily> w23_circuit_families();  // m = 3
std::vector<CircuitFamily> w22_circuit_families();  // m = 2

}  // namespace exc
