#pragma once

#include <stdexcept>
#include <string>

namespace toricdual {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define TORICDUAL_ERROR(Name)                         \
  struct Name : Error {                               \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

TORICDUAL_ERROR(DegenerateInput);
TORICDUAL_ERROR(OriginNotInterior);
TORICDUAL_ERROR(NotReflexive);
TORICDUAL_ERROR(FacetInteriorRay);
TORICDUAL_ERROR(NotSimplicialOrSmooth);
TORICDUAL_ERROR(NontrivialToricContribution);
TORICDUAL_ERROR(NoUnimodularComplement);
TORICDUAL_ERROR(DegenerateLattice);
TORICDUAL_ERROR(OddLattice);
TORICDUAL_ERROR(DimensionMismatch);
TORICDUAL_ERROR(NonSquareMatrix);
TORICDUAL_ERROR(MonomialDegreeMismatch);
TORICDUAL_ERROR(PointNotInBasisSpan);
TORICDUAL_ERROR(ParseError);
TORICDUAL_ERROR(InvariantViolation);

#undef TORICDUAL_ERROR

}  // namespace toricdual
