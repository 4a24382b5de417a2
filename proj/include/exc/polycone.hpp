#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "exc/bitset.hpp"
#include "exc/exterior.hpp"
#include "exc/matrix.hpp"

namespace exc {

// The described cone contains a line; carries a witness direction.
struct NotPointedError : std::runtime_error {
  IntVec lineality;
  explicit NotPointedError(IntVec line)
      : std::runtime_error("cone is not pointed"), lineality(std::move(line)) {}
};

// Bilinear pairing fixing how normal vectors act on points. IDENTITY means
// the dot product; the top-wedge pairing pairs the degree-m normal against
// the degree-k point via the top coefficient of their wedge.
class Pairing {
 public:
  static Pairing identity(int dim);
  static Pairing top_wedge(int d, int k);

  int dim() const { return dim_; }
  bool is_identity() const { return identity_; }

  // pair(n, x) = n^T P x
  Int pair(const IntVec& normal, const IntVec& point) const;
  Rational pair(const IntVec& normal, const RatVec& point) const;

  IntVec apply(const IntVec& point) const;             // P x
  IntVec apply_transpose(const IntVec& normal) const;  // P^T n
  Pairing transposed() const;

  bool operator==(const Pairing& o) const;

 private:
  Pairing(int dim, bool ident) : dim_(dim), identity_(ident) {}
  int dim_;
  bool identity_;
  std::vector<IntVec> mat_;  // row-major P, empty when identity
};

// Extreme rays of {x : a^T x >= 0 for all a in ineqs} by incremental double
// description with exact adjacency (rank of the common tight set). Throws
// NotPointedError with a kernel vector when the inequalities admit a line.
std::vector<IntVec> dd_extreme_rays(const std::vector<IntVec>& ineqs, int dim);

enum class Containment { WEAK, STRICT };

struct FaceLattice {
  // One entry per nonzero face: the set of extreme rays it contains and its
  // cone dimension. Includes the facets and the full cone itself.
  std::vector<std::pair<Bitset, int>> faces;
};

class PointedCone {
 public:
  // Facet enumeration from generators. Rays are brought to primitive form,
  // deduplicated, and reduced to the extreme ones.
  static PointedCone from_rays(const std::vector<IntVec>& rays, Pairing pairing);
  static PointedCone from_rays(const std::vector<RatVec>& rays, Pairing pairing);

  // Ray enumeration from an inequality description.
  static PointedCone from_inequalities(const std::vector<IntVec>& normals, Pairing pairing);

  int dim() const { return dim_; }
  const Pairing& pairing() const { return pairing_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<Bitset>& incidence() const { return incidence_; }

  bool contains(const RatVec& point, Containment mode) const;

  // Rays and facet normals swap; the pairing transposes.
  PointedCone dual() const;

  // Cone cut out by the kept facet inequalities alone.
  PointedCone delete_facets(const std::vector<int>& keep) const;

  FaceLattice face_lattice() const;

  // Projective face counts (f_0 .. f_{dim-2}, 1), the trailing entry being
  // the polytope itself.
  std::vector<long> f_vector() const;

  bool same_cone(const PointedCone& o) const { return dim_ == o.dim_ && rays_ == o.rays_ && facets_ == o.facets_; }

 private:
  PointedCone(int dim, Pairing pairing) : dim_(dim), pairing_(std::move(pairing)) {}
  void finalize(std::vector<IntVec> rays, std::vector<IntVec> facets);

  int dim_;
  Pairing pairing_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> facets_;
  std::vector<Bitset> incidence_;
};

// Lex comparison for deterministic ordering of integer vectors.
bool intvec_less(const IntVec& a, const IntVec& b);

}  // namespace exc
