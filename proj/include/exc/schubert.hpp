#pragma once

#include <optional>

#include "exc/polycone.hpp"
#include "exc/twistor.hpp"

namespace exc {

// Cone over the exterior cyclic polytope: rays are the wedges of k columns
// of z, functionals act through the standard inner product on the lex wedge
// coordinates.
PointedCone exterior_cyclic_cone(const PositiveMatrix& z, int k);

// True iff h is a wedge of deg(h) vectors; the factors returned satisfy
// w_1 ^ ... ^ w_m = h exactly.
bool is_decomposable(const ExteriorVector& h, std::vector<RatVec>* factors = nullptr);

enum class FacetKind { SCHUBERT, NON_SCHUBERT };

struct FacetClassification {
  int facet_index;
  std::vector<Subset> vertices;   // wedge labels of the incident rays
  IntVec facet_vector;            // inner-product normal in wedge coordinates
  ExteriorVector normal;          // the same functional as a degree-m vector
  FacetKind kind;
  std::vector<RatVec> witness;    // decomposition factors when SCHUBERT
};

struct SchubertClassification {
  PointedCone cone;
  std::vector<FacetClassification> facets;
  int schubert_count() const;
};

// Classify every facet of the exterior cyclic cone by decomposability of
// its normal in the complementary exterior power.
SchubertClassification classify_facets(const PositiveMatrix& z, int k);

// The lines W_i ^ W_j of the twist, as primitive vectors in lex wedge
// coordinates, sorted; k = m = 2 only.
std::vector<IntVec> predicted_schubert_normals(const PositiveMatrix& z);

// Cone cut out by the Schubert facet inequalities alone.
PointedCone schubert_polytope(const PositiveMatrix& z, int k);

struct TwistDualityReport {
  bool cones_equal = false;          // Schubert cone of z vs dual of the twisted cone
  bool vertex_identity = false;      // rays on the Grassmannian are the wedge vertices
  bool normals_are_predicted = false;  // Schubert facet vectors = twist wedges
  std::string detail;
};

// k = m = 2: compares the Schubert exterior cyclic cone of z with the dual
// of the exterior cyclic cone of the twist of z, to exact ray/facet sets.
TwistDualityReport twist_duality_check(const PositiveMatrix& z);

// (k,m) = (3,2), n = 6: every Schubert facet vector is a triple wedge
// W_i ^ W_j ^ W_k of the twist, projectively.
bool schubert_normals_are_triple_wedges(const PositiveMatrix& z);

// The single-bracket facet inequalities (consecutive-pair hyperplanes for
// even m, endpoint hyperplanes for m = 1) appear among the cone's facets.
bool consecutive_facets_present(const PositiveMatrix& z, int k);

}  // namespace exc
