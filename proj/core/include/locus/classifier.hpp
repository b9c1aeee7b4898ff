#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locus/determinantal.hpp"
#include "locus/net_model.hpp"
#include "locus/variety.hpp"

namespace locus {

// Census of the regular curvature locus, decided by the shape of the exact
// variety decomposition.
enum class Kind {
  RomanSteiner,     // 6 real lines, multiplicity 1
  CrossCapSurface,  // 2 real lines + 2 conjugate pairs, multiplicity 1
  Type5,            // 4 real lines, multiplicities 2,2,1,1
  Type6,            // 2 real lines, multiplicity 3
  TruncatedCone,    // one plane and one real line
  Ellipsoid,        // one plane, no real line
  Planar,           // the net is not substantial: the locus sits in a plane
  Degenerate,       // substantial, but the evidence matches no census row
};

std::string kind_name(Kind k);

struct LocusClassification {
  Kind kind = Kind::Degenerate;
  bool substantial = false;
  Decomposition evidence;
};

// Classifies the locus of a regular 3-manifold whose tangent directions are
// constrained to the given positive definite quadric (unit sphere by
// default).  Solver errors propagate; an unmatched census is reported as
// Kind::Degenerate, never guessed.
LocusClassification classify_regular(const Net& net,
                                     const Constraint& con = Constraint::sphere(),
                                     std::uint64_t seed = 0, double tol = 1e-9);

// Closed-form sufficient condition for the six-real-line census: the mean
// vector and the first two modulation vectors vanish while the remaining
// three span.  When the condition holds the full classification is asserted
// to agree (Errc::TableViolation otherwise).
struct SteinerCheck {
  bool holds = false;
  LocusClassification classification;
};
SteinerCheck steiner_sufficient(const Net& net, std::uint64_t seed = 0,
                                double tol = 1e-9);

// Singularity types of the locus of a corank-1 singular 3-manifold, keyed by
// local multiplicity in the cylinder-constraint variety.
enum class SingularType { CC, TCC, DTCC, Other };

struct FiniteSingularity {
  SingularType type = SingularType::Other;
  LineRecord line;
};

enum class PlanarKind { Ellipse, Paraboloid, PlanarOther };

std::string planar_kind_name(PlanarKind k);

struct SingularReport {
  std::vector<FiniteSingularity> finite;
  std::vector<LineRecord> at_infinity;  // records parallel to the null axis
  std::optional<PlanarKind> planar_kind;
  bool asymptotic = false;         // the null direction kills the Jacobian
  bool degenerate_system = false;  // every cylinder minor vanished identically
  Decomposition evidence;
};

// Decomposes the cylinder-constraint variety of a corank-1 jet.  Real
// solutions away from the null axis become finite singularities (multiplicity
// 1/2/3 -> CC/TCC/DTCC); solutions along the axis are collected separately.
// When the variety is not a point census (a plane shows up, or the system
// vanishes identically) the locus is a quadric-like object and planar_kind
// reports which one.
SingularReport classify_singular(const Net& net, std::uint64_t seed = 0,
                                 double tol = 1e-9);
SingularReport classify_singular(const SingularJet& jet, std::uint64_t seed = 0,
                                 double tol = 1e-9);

// Compact label of a singular report: "6CC", "2CC", "2CC+2TCC", "2DTCC",
// "Ellipse", "Paraboloid", ...
std::string census_string(const SingularReport& r);

// Classifies generic members of one atlas orbit: seeded positive definite
// constraints in regular mode, generic transforms followed by a projection in
// singular mode.  Every observed label must be listed for the orbit, else
// Errc::TableViolation; returns the set of observed labels.
std::set<std::string> generic_census(const std::string& orbit, int trials,
                                     std::uint64_t seed,
                                     bool singular_mode = false,
                                     double tol = 1e-9);

// Singular census of a member net along a preferred tangent direction: the
// pole when it is not asymptotic, otherwise a seeded walk over rational unit
// directions (Errc::BadInput when 64 draws all land asymptotic).  A net whose
// Jacobian vanishes identically is classified as it stands; there every
// direction is asymptotic and projection changes nothing.
SingularReport singular_trial(const Net& member, std::uint64_t seed = 0,
                              double tol = 1e-9);

}  // namespace locus
