#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "locus/determinantal.hpp"
#include "locus/net_model.hpp"

namespace locus {

// Point of the curvature locus over the unit sphere, evaluated directly:
// Q(u) with u = (cos theta sin phi, sin theta sin phi, cos phi).
std::array<double, 3> eta_regular(const Net& net, double theta, double phi);

// The same point through the mean/modulation invariants of eta_basis.  The
// expansion carries the second-derivative normalization, so it equals
// 2 * eta_regular at every angle pair; its B2 modulation rides on sin^2 phi.
// Kept as a separate entry point so the two evaluation routes can be
// compared against each other.
std::array<double, 3> eta_expansion(const EtaBasis& basis, double theta,
                                    double phi);

// Point of the locus of a corank-1 jet over the cylinder a^2 + b^2 = 1 with
// (a, b) = (cos theta, sin theta):
//   sum_i (l a^2 + 2 m a b + n b^2 + p c^2 + 2 q a c + 2 r b c) nu_i.
std::array<double, 3> eta_singular(const SingularJet& jet, double theta,
                                   double c);

// Output of the numeric rank scan: unit directions where the differential
// of eta drops below rank 2, antipodally deduplicated.  `curve` reports a
// one-dimensional family of rank-deficient points instead of isolated
// pinch directions.
struct SingularScan {
  std::vector<std::array<double, 3>> directions;
  bool curve = false;
};

// Scans a grid x grid parameter mesh for rank deficiency of eta.  At every
// node the 3x2 Jacobian is taken against an orthonormal tangent frame of
// the domain and scaled by the local gradient size; grid-local minima of
// its smallest singular value are refined by a shrinking-stencil search and
// kept when they end below tol.  The net overload scans the sphere, the jet
// overload scans the cylinder truncated to |c| <= height.  grid must be at
// least 64 (Errc::BadInput).
SingularScan numeric_singular_points(const Net& net, int grid = 256,
                                     double tol = 1e-6);
SingularScan numeric_singular_points(const SingularJet& jet, int grid = 256,
                                     double tol = 1e-6, double height = 4.0);

// Triangulated image of eta as a plain text mesh: "v x y z" vertex lines
// (nine significant digits, locale independent) followed by 1-indexed
// "f i j k" triangles.  samples angular steps wrap around, samples + 1 rows
// run across the second parameter, so samples = 8 writes 72 vertices and
// 128 triangles.  Deterministic for fixed inputs.  The net overload meshes
// the sphere image, the jet overload the cylinder image over [-height,
// height].
void export_mesh(const Net& net, int samples, std::ostream& out);
void export_mesh(const SingularJet& jet, int samples, double height,
                 std::ostream& out);

// Same, writing to a file path; Errc::BadInput when the path cannot be
// opened or the stream fails.
void export_mesh_file(const Net& net, int samples, const std::string& path);
void export_mesh_file(const SingularJet& jet, int samples, double height,
                      const std::string& path);

}  // namespace locus
