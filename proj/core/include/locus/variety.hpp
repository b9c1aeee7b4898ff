#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "locus/poly.hpp"

namespace locus {

struct PlaneComponent {
  Poly factor;  // normalized linear form
  int multiplicity = 1;
};

struct PlaneSplit {
  std::vector<PlaneComponent> planes;
  Poly common;                 // product of the factors; the constant 1 if none
  std::vector<Poly> residual;  // nonzero entries divided by the common factor
};

// Splits the codimension-1 part off the common zero set of a homogeneous
// system.  Errc::DegenerateSystem when every entry vanishes identically;
// Errc::NonPlanarComponent when the common factor has an irreducible or
// unrepresentable factor, i.e. is not a product of real linear forms with
// closed-form coefficients.
PlaneSplit plane_components(const std::vector<Poly>& system,
                            std::uint64_t seed = 0);

// An isolated projective direction in the zero set.  Conjugate pairs are
// reported once, with real == false and the representative chosen so the
// first nonreal coordinate has positive imaginary part; such a record counts
// twice toward any total.
struct LineRecord {
  bool real = true;
  bool exact = true;  // coordinates in v when set, in vc otherwise
  std::array<Surd, 3> v{};
  std::array<std::complex<double>, 3> vc{};
  int multiplicity = 1;

  std::array<std::complex<double>, 3> approx() const;
};

// Isolated common zeros in the projective plane, found by two independent
// random eliminations that must agree (Errc::UnstableElimination).  A curve
// inside the zero set raises Errc::NotZeroDimensional.  Multiplicities are
// left at 1.
std::vector<LineRecord> line_solutions(const std::vector<Poly>& system,
                                       std::uint64_t seed = 0,
                                       double tol = 1e-9);

// Local dual space dimension of the system at one of its zeros, stabilized
// over increasing differential order.  Errc::MultiplicityOverflow when the
// dimension is still growing at order cap, which is what a non-isolated zero
// produces.
int local_multiplicity(const std::vector<Poly>& system, const LineRecord& at,
                       int cap = 6, double tol = 1e-9);

struct Decomposition {
  std::vector<PlaneComponent> planes;
  Poly common;
  std::vector<Poly> residual;
  std::vector<LineRecord> lines;    // multiplicities filled in
  int total_line_multiplicity = 0;  // conjugate pair records counted twice
};

// Planes, then isolated directions of the residual system, then exact local
// multiplicities.  When no plane is present the multiplicities of a system of
// this kind must add up to expected_total (pass 0 to skip the check);
// Errc::MultiplicityMismatch otherwise.
Decomposition decompose(const std::vector<Poly>& system,
                        std::uint64_t seed = 0, double tol = 1e-9,
                        int expected_total = 6);

}  // namespace locus
