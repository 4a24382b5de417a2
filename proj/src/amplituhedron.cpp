#include "exc/amplituhedron.hpp"

#include <algorithm>
#include <set>

#include "exc/matroid.hpp"

namespace exc {

GrassmannPoint make_grassmann_point(const RatMatrix& m) {
  GrassmannPoint y{m.rows(), m.cols(), m, ExteriorVector()};
  std::vector<RatVec> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  y.plucker = wedge_all(rows, m.cols());
  if (y.plucker.is_zero()) throw std::domain_error("make_grassmann_point: matrix not of full rank");
  return y;
}

GrassmannPoint sample_amplituhedron(const PositiveMatrix& z, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::set<long> drawn;
  while (static_cast<int>(drawn.size()) < z.cols()) drawn.insert(static_cast<long>(rng.below(256)));
  RatVec nodes;
  for (long u : drawn) nodes.push_back(make_rational(u, 256));
  PositiveMatrix m = vandermonde(nodes, k);
  return make_grassmann_point(m.matrix() * z.matrix().transpose());
}

GrassmannPoint random_grassmann_point(int k, int d, SplitMix64& rng) {
  while (true) {
    RatMatrix m(k, d);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = Rational(rng.range(-1000, 1000));
    if (rank(m) == k) return make_grassmann_point(m);
  }
}

Rational y_bracket(const GrassmannPoint& y, const PositiveMatrix& z, int i, int j) {
  ExteriorVector line = wedge(ExteriorVector::from_vector(z.column_twisted(z.rows(), i)),
                              ExteriorVector::from_vector(z.column_twisted(z.rows(), j)));
  return top_pair(y.plucker, line);
}

namespace {

Rational inner(const RatVec& a, const IntVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * Rational(b[i]);
  return s;
}

Verdict verdict_from(bool any_zero, bool any_negative) {
  if (any_negative) return Verdict::OUT;
  return any_zero ? Verdict::BOUNDARY : Verdict::IN;
}

}  // namespace

Verdict member_bar(const GrassmannPoint& y, const std::vector<IntVec>& bar_functionals) {
  RatVec yd = y.plucker.dense();
  bool any_zero = false;
  for (const auto& f : bar_functionals) {
    Rational v = inner(yd, f);
    if (v < 0) return Verdict::OUT;
    if (v == 0) any_zero = true;
  }
  return verdict_from(any_zero, false);
}

Verdict member_bar(const GrassmannPoint& y, const PositiveMatrix& z) {
  return member_bar(y, predicted_schubert_normals(z));
}

Verdict member_signflip(const GrassmannPoint& y, const PositiveMatrix& z, int k) {
  const int n = z.cols();
  bool any_zero = false;
  for (int i = 1; i < n; ++i) {
    Rational b = y_bracket(y, z, i, i + 1);
    if (b < 0) return Verdict::OUT;
    if (b == 0) any_zero = true;
  }
  int flips = 0, last = 0;
  for (int j = 2; j <= n; ++j) {
    Rational b = y_bracket(y, z, 1, j);
    int s = sign_of(b);
    if (s == 0) {
      any_zero = true;
      continue;
    }
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  if (any_zero) return Verdict::BOUNDARY;
  return flips == k ? Verdict::IN : Verdict::OUT;
}

Verdict member_dual(const GrassmannPoint& y, const PositiveMatrix& z) {
  const int n = z.cols();
  bool any_zero = false;
  for (int i = 1; i < n; ++i) {
    Rational b = y_bracket(y, z, i, i + 1);
    if (b < 0) return Verdict::OUT;
    if (b == 0) any_zero = true;
  }
  Rational closing = y_bracket(y, z, 1, n);
  if (closing < 0) return Verdict::OUT;
  if (closing == 0) any_zero = true;
  int flips = 0, last = 0;
  for (int j = 2; j <= n; ++j) {
    Rational b = y_bracket(y, z, 1, j);
    int s = sign_of(b);
    if (s == 0) {
      any_zero = true;
      continue;
    }
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  if (any_zero) return Verdict::BOUNDARY;
  return flips == 0 ? Verdict::IN : Verdict::OUT;
}

GrassmannPoint orthogonal_complement_point(const GrassmannPoint& y) {
  ExteriorVector starred = hodge_star(y.plucker);
  auto factors = decompose(starred);
  if (!factors) throw std::logic_error("orthogonal_complement_point: star of a decomposable must decompose");
  RatMatrix m(static_cast<int>(factors->size()), y.d);
  for (size_t r = 0; r < factors->size(); ++r)
    for (int c = 0; c < y.d; ++c) m.at(static_cast<int>(r), c) = (*factors)[r][c];
  return make_grassmann_point(m);
}

Verdict member_cone(const GrassmannPoint& y, const PointedCone& cone) {
  RatVec yd = y.plucker.dense();
  bool any_zero = false;
  for (const auto& f : cone.facets()) {
    Rational v = cone.pairing().pair(f, yd);
    if (v < 0) return Verdict::OUT;
    if (v == 0) any_zero = true;
  }
  return verdict_from(any_zero, false);
}

RatVec separation_image_of_pair(const PositiveMatrix& z, int a, int b) {
  // Image of the pair basis vector under the bar-expansion map, in the
  // pair coordinates of the full wedge square: e_{a-1,a} <a+1, b-1 b b+1>
  // + e_{a,a+1} <a-1, b-1 b b+1> - e_{a-1,a+1} <a, b-1 b b+1>, indices
  // twisted cyclically.
  const int n = z.cols();
  auto pair_vec = [&](int i, int j) {
    // e_i ^ e_j in the wedge square of R^n with twisted wrapping (k = 2).
    RatVec v(static_cast<size_t>(n) * (n - 1) / 2, Rational(0));
    int sign = 1;
    auto wrap = [&](int x) {
      while (x < 1) {
        x += n;
        sign = -sign;
      }
      while (x > n) {
        x -= n;
        sign = -sign;
      }
      return x;
    };
    int iw = wrap(i), jw = wrap(j);
    if (iw == jw) return v;
    if (iw > jw) {
      std::swap(iw, jw);
      sign = -sign;
    }
    int idx = 0;
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q, ++idx)
        if (p == iw && q == jw) v[static_cast<size_t>(idx)] = sign;
    return v;
  };
  auto br = [&](std::vector<int> cols) {
    std::vector<BracketArg> args;
    for (int c : cols) args.emplace_back(c);
    return bracket(z, 4, args);
  };
  RatVec out(static_cast<size_t>(n) * (n - 1) / 2, Rational(0));
  auto add = [&](const RatVec& v, const Rational& c) {
    for (size_t i = 0; i < out.size(); ++i) out[i] += v[i] * c;
  };
  add(pair_vec(a - 1, a), br({a + 1, b - 1, b, b + 1}));
  add(pair_vec(a, a + 1), br({a - 1, b - 1, b, b + 1}));
  add(pair_vec(a - 1, a + 1), -br({a, b - 1, b, b + 1}));
  return out;
}

SeparationReport separation_certificate(const PositiveMatrix& z) {
  const int n = z.cols();
  SeparationReport rep;
  // Support vector: weight one on the pairs at cyclic distance two.
  std::vector<int> support;
  {
    int idx = 0;
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q, ++idx) {
        int dist = std::min(q - p, n - (q - p));
        if (dist == 2) support.push_back(idx);
      }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      ++rep.generators;
      RatVec img = separation_image_of_pair(z, a, b);
      Rational pairing = 0;
      for (int idx : support) pairing += img[idx];
      if (pairing > 0) {
        rep.separated = false;
        rep.worst = "pair " + std::to_string(a) + "," + std::to_string(b);
      }
    }
  return rep;
}

BoundaryAuditReport linear_boundary_audit(const PositiveMatrix& z) {
  const int n = z.cols();
  if (z.rows() != n - 2) throw std::domain_error("linear_boundary_audit: requires k=2, m=n-4");
  if (n > 8) throw std::domain_error("linear_boundary_audit: guard n <= 8");
  SchubertClassification cls = classify_facets(z, 2);
  BoundaryAuditReport rep;
  for (const auto& f : cls.facets) {
    BoundaryAuditEntry e;
    e.vertices = f.vertices;
    std::vector<std::pair<int, int>> edges;
    for (const Subset& s : f.vertices) edges.emplace_back(s[0], s[1]);
    EdgeGraph g(edges);
    e.positroid_pass = passes_positroid_filter(g, n);
    // Complement of a 4-clique: every pair except those inside a 4-subset.
    e.is_clique_complement = false;
    if (e.vertices.size() == static_cast<size_t>(n * (n - 1) / 2 - 6)) {
      std::set<std::pair<int, int>> have(edges.begin(), edges.end());
      std::set<int> missing_support;
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
          if (!have.count({p, q})) {
            missing_support.insert(p);
            missing_support.insert(q);
          }
      e.is_clique_complement = missing_support.size() == 4;
    }
    if (e.positroid_pass) {
      ++rep.passing;
      if (!e.is_clique_complement) rep.all_passing_are_clique_complements = false;
    }
    rep.facets.push_back(std::move(e));
  }
  return rep;
}

}  // namespace exc
