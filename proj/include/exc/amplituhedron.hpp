#pragma once

#include <cstdint>

#include "exc/schubert.hpp"

namespace exc {

// Point of Gr(k, k+m) as a full-rank k x (k+m) matrix with its wedge.
struct GrassmannPoint {
  int k;
  int d;
  RatMatrix mat;
  ExteriorVector plucker;
};

GrassmannPoint make_grassmann_point(const RatMatrix& m);

// Image of a positive point of Gr(k, n) under z: rows of a Vandermonde on
// random ascending nodes, mapped by the transpose of z.
GrassmannPoint sample_amplituhedron(const PositiveMatrix& z, int k, std::uint64_t seed);

// Uniform-style sample: integer k x d matrix with entries in [-1000, 1000],
// redrawn until full rank.
GrassmannPoint random_grassmann_point(int k, int d, SplitMix64& rng);

enum class Verdict { IN, OUT, BOUNDARY };

// Stacked bracket <Y i j> = det of Y's rows over columns i, j of z.
Rational y_bracket(const GrassmannPoint& y, const PositiveMatrix& z, int i, int j);

// All <Y, W_i ^ W_j> >= 0 with W the twist: membership in the Schubert
// exterior cyclic cone. BOUNDARY when some pairing is exactly zero.
Verdict member_bar(const GrassmannPoint& y, const PositiveMatrix& z);
Verdict member_bar(const GrassmannPoint& y, const std::vector<IntVec>& bar_functionals);

// m = 2 sign-flip description: <Y i i+1> > 0 for i < n and exactly k sign
// changes along (<Y 1 2>, ..., <Y 1 n>); BOUNDARY when a bracket vanishes.
Verdict member_signflip(const GrassmannPoint& y, const PositiveMatrix& z, int k);

// Zero-flip variant with the closing bracket <Y 1 n> > 0.
Verdict member_dual(const GrassmannPoint& y, const PositiveMatrix& z);

// Facet-inequality membership in a computed cone.
Verdict member_cone(const GrassmannPoint& y, const PointedCone& cone);

// The point whose rows span the orthogonal complement; its wedge is the
// Hodge star of y's. The zero-flip region of z maps onto the twisted
// membership region exactly through this involution.
GrassmannPoint orthogonal_complement_point(const GrassmannPoint& y);

struct SeparationReport {
  bool separated = true;      // every pairing against the support vector <= 0
  long generators = 0;
  std::string worst;          // a violating pair, when any
};

// The coordinate map sending the bracket vector of Y to its bar-bracket
// vector, checked against the support vector on distance-two pairs.
SeparationReport separation_certificate(const PositiveMatrix& z);

// Expansion of the map above on one generator, as wedge-coordinate output.
RatVec separation_image_of_pair(const PositiveMatrix& z, int a, int b);

struct BoundaryAuditEntry {
  std::vector<Subset> vertices;
  bool positroid_pass;
  bool is_clique_complement;  // of the form "all pairs missing a 4-clique"
};

struct BoundaryAuditReport {
  std::vector<BoundaryAuditEntry> facets;
  bool all_passing_are_clique_complements = true;
  int passing = 0;
};

// Facets of the k=2, m=n-4 exterior cyclic cone classified by the positroid
// restriction filter; every passing facet must miss exactly a 4-clique.
BoundaryAuditReport linear_boundary_audit(const PositiveMatrix& z);

}  // namespace exc
