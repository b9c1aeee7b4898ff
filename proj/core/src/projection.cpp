#include "locus/projection.hpp"

#include <set>
#include <utility>

#include "locus/determinantal.hpp"
#include "locus/error.hpp"

namespace locus {

namespace {

Surd S(int v) { return Surd(Rational(v)); }

// Multiset fingerprints used for the projected-versus-regular comparison:
// line records as (multiplicity, reality), plane records by multiplicity.
std::multiset<std::pair<int, bool>> line_shape(const Decomposition& d) {
  std::multiset<std::pair<int, bool>> s;
  for (const auto& l : d.lines) s.insert({l.multiplicity, l.real});
  return s;
}

std::multiset<int> plane_shape(const Decomposition& d) {
  std::multiset<int> s;
  for (const auto& p : d.planes) s.insert(p.multiplicity);
  return s;
}

}  // namespace

bool is_asymptotic(const Net& net, const Vec3& v) {
  Poly delta = minors(net, Constraint::sphere()).delta;
  return delta.eval(v).is_zero();
}

Mat3 rotate_to_pole(const Vec3& v) {
  Surd len2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (len2 != S(1)) fail(Errc::BadInput, "rotate_to_pole expects a unit vector");
  const Surd& c = v[2];
  if (c == S(-1)) {
    // Antipode: half turn about the x axis.
    Mat3 r = mat_identity();
    r[1][1] = S(-1);
    r[2][2] = S(-1);
    return r;
  }
  Mat3 k{};
  k[0][2] = -v[0];
  k[1][2] = -v[1];
  k[2][0] = v[0];
  k[2][1] = v[1];
  Mat3 k2 = mat_mul(k, k);
  Surd f = (S(1) + c).inverse();
  Mat3 r = mat_identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] += k[i][j] + k2[i][j] * f;
  return r;
}

ProjectionReport project_along(const Net& net, Vec3 v, std::uint64_t seed,
                               double tol) {
  Surd len2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (len2.is_zero()) fail(Errc::BadInput, "projection direction is zero");
  std::optional<Surd> len = Surd::try_sqrt(len2);
  if (!len)
    fail(Errc::NotRepresentable,
         "direction length does not lie in the surd field; pass a unit vector");
  if (*len != S(1)) {
    Surd inv = len->inverse();
    for (auto& x : v) x *= inv;
  }

  ProjectionReport rep;
  rep.direction = v;
  rep.asymptotic = is_asymptotic(net, v);
  rep.rotation = rotate_to_pole(v);
  // New coordinates w = R x, so the forms pull back through R^T.
  rep.rotated_net = compose_linear(net, mat_transpose(rep.rotation));
  Vec3 pole{S(0), S(0), S(1)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rep.alpha_prime[i][j] = rep.rotated_net.q[i].derivative(j).eval(pole);
  rep.singular_report = classify_singular(rep.rotated_net, seed, tol);
  if (!rep.asymptotic) {
    LocusClassification reg = classify_regular(net, Constraint::sphere(), seed, tol);
    rep.isomorphic_to_regular =
        line_shape(reg.evidence) == line_shape(rep.singular_report.evidence) &&
        plane_shape(reg.evidence) == plane_shape(rep.singular_report.evidence);
    // A plane-bound locus has no meaningful decomposition to compare against.
    if (!rep.isomorphic_to_regular && reg.substantial)
      fail(Errc::TableViolation,
           "projection along a non-asymptotic direction changed the census");
  }
  return rep;
}

}  // namespace locus
