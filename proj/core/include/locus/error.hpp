#pragma once

#include <stdexcept>
#include <string>

namespace locus {

// Every recoverable failure in the library throws Error with one of these
// codes.  Callers that need to branch (the CLI exit-code mapping, the table
// verifier) switch on code() instead of parsing message text.
enum class Errc {
  AllZero,              // gcd of an all-zero polynomial list
  NoElimination,        // resultant asked to eliminate a variable of degree 0
  DegenerateSystem,     // all four determinantal cubics vanish identically
  NonPlanarComponent,   // common factor has an irreducible factor of degree >= 2
  UnstableElimination,  // independently seeded solver passes disagree
  NotZeroDimensional,   // residual system still has a curve of solutions
  MultiplicityOverflow, // local multiplicity did not stabilise by degree 6
  MultiplicityMismatch, // solution multiplicities of a cubic system do not sum to 6
  NotPositiveDefinite,  // constraint quadric is not positive definite
  CorruptAtlas,         // orbit table failed its self check
  TableViolation,       // observed classification leaves the allowed table row
  NotRepresentable,     // exact surd arithmetic cannot express the value
  BadInput,             // malformed user input (files, options, directions)
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::AllZero: return "AllZero";
    case Errc::NoElimination: return "NoElimination";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::NonPlanarComponent: return "NonPlanarComponent";
    case Errc::UnstableElimination: return "UnstableElimination";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::MultiplicityOverflow: return "MultiplicityOverflow";
    case Errc::MultiplicityMismatch: return "MultiplicityMismatch";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::CorruptAtlas: return "CorruptAtlas";
    case Errc::TableViolation: return "TableViolation";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace locus
