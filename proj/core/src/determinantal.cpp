#include "locus/determinantal.hpp"

#include <vector>

#include "locus/error.hpp"

namespace locus {

namespace {

Surd S(long long n, long long d = 1) { return Surd(Rational(n, d)); }

Poly axis_square(int a) { return Poly::var(a) * Poly::var(a); }

}  // namespace

Constraint Constraint::sphere() {
  Constraint c;
  c.shape = Shape::Sphere;
  c.form = axis_square(0) + axis_square(1) + axis_square(2);
  return c;
}

Constraint Constraint::cylinder() {
  Constraint c;
  c.shape = Shape::Cylinder;
  c.form = axis_square(0) + axis_square(1);
  return c;
}

Constraint Constraint::general(const Poly& form) {
  auto a = quad_matrix(form);  // BadInput when not a quadratic form
  Surd m1 = a[0][0];
  Surd m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Surd m3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (m1.sign() <= 0 || m2.sign() <= 0 || m3.sign() <= 0)
    fail(Errc::NotPositiveDefinite,
         "constraint form is not positive definite: " + form.str());
  Constraint c;
  c.shape = Shape::General;
  c.form = form;
  return c;
}

std::array<std::array<Poly, 3>, 4> build_matrix(const Net& net,
                                                const Constraint& con) {
  std::array<std::array<Poly, 3>, 4> m;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) m[i][a] = net.q[i].derivative(a);
  for (int a = 0; a < 3; ++a) m[3][a] = con.form.derivative(a);
  return m;
}

Minors minors(const Net& net, const Constraint& con) {
  auto m = build_matrix(net, con);
  Minors out;
  out.delta = det3({m[0], m[1], m[2]});
  out.d[0] = det3({m[1], m[2], m[3]});
  out.d[1] = det3({m[0], m[2], m[3]});
  out.d[2] = det3({m[0], m[1], m[3]});
  return out;
}

Substantiality substantiality(const Net& net, const Constraint& con) {
  // Row space of four quadrics in the six monomial coordinates, with an
  // identity block alongside to read off any dependence.
  std::array<QuadCoeffs, 4> rows = {quad_coeffs(net.q[0]),
                                    quad_coeffs(net.q[1]),
                                    quad_coeffs(net.q[2]),
                                    quad_coeffs(con.form)};
  std::array<std::array<Surd, 4>, 4> track{};
  for (int i = 0; i < 4; ++i) track[i][i] = S(1);

  int rank = 0;
  for (int col = 0; col < 6 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (rows[r][col].sign() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(track[pivot], track[rank]);
    for (int r = rank + 1; r < 4; ++r) {
      if (rows[r][col].sign() == 0) continue;
      Surd f = rows[r][col] / rows[rank][col];
      for (int c = col; c < 6; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
      for (int c = 0; c < 4; ++c)
        track[r][c] = track[r][c] - f * track[rank][c];
    }
    ++rank;
  }

  Substantiality s;
  if (rank == 4) return s;
  s.substantial = false;
  // A zero row certifies a q1 + b q2 + c q3 + e form = 0; report d = -e.
  const auto& w = track[rank];
  s.witness = {w[0], w[1], w[2], -w[3]};
  return s;
}

EtaBasis eta_basis(const Net& net) {
  EtaBasis b;
  for (int i = 0; i < 3; ++i) {
    QuadCoeffs c = quad_coeffs(net.q[i]);
    Surd fxx = S(2) * c[0], fyy = S(2) * c[2], fzz = S(2) * c[5];
    b.H[i] = S(1, 3) * (fxx + fyy + fzz);
    b.B1[i] = S(1, 12) * (S(2) * fzz - fxx - fyy);
    b.B2[i] = S(1, 2) * (fxx - fyy);
    b.B3[i] = c[1];
    b.B4[i] = c[3];
    b.B5[i] = c[4];
  }
  return b;
}

}  // namespace locus
