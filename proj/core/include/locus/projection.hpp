#pragma once

#include <cstdint>

#include "locus/classifier.hpp"
#include "locus/net_model.hpp"

namespace locus {

// True when the Jacobian determinant of the net vanishes at v, i.e. when v is
// an asymptotic direction of the regular embedding.  Exact test.
bool is_asymptotic(const Net& net, const Vec3& v);

// Rotation carrying the unit vector v to the pole e3.  Rodrigues form
// R = I + K + K^2 / (1 + v.z), with the reflection diag(1,-1,-1) at the
// antipode.  Requires |v| = 1.
Mat3 rotate_to_pole(const Vec3& v);

struct ProjectionReport {
  Vec3 direction;  // normalized
  bool asymptotic = false;
  Mat3 rotation;
  Net rotated_net;
  // Jacobian of the rotated net at the pole; it drops rank exactly when the
  // direction is asymptotic.
  Mat3 alpha_prime;
  SingularReport singular_report;
  // The tangent projection of a regular 3-manifold along a non-asymptotic
  // direction reproduces the regular locus; this flag records the multiset
  // comparison of the two variety decompositions.
  bool isomorphic_to_regular = false;
};

// Projects the regular 3-manifold with second fundamental form `net` along
// the tangent direction v: rotates v to the pole, classifies the resulting
// corank-1 jet over the cylinder, and cross-checks the non-asymptotic case
// against the sphere decomposition (Errc::TableViolation on mismatch).
ProjectionReport project_along(const Net& net, Vec3 v, std::uint64_t seed = 0,
                               double tol = 1e-9);

}  // namespace locus
