#pragma once

#include <stdexcept>
#include <string>

namespace qj {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- exact field arithmetic ---
struct FieldError : Error { using Error::Error; };
struct RadicandIsSquare : FieldError { using FieldError::FieldError; };
struct TowerTooDeep : FieldError { using FieldError::FieldError; };
struct TowerMismatch : FieldError { using FieldError::FieldError; };
struct DivisionByZero : FieldError { using FieldError::FieldError; };
struct LevelOutOfRange : FieldError { using FieldError::FieldError; };

// --- group engine ---
struct GroupError : Error { using Error::Error; };
struct CapExceeded : GroupError { using GroupError::GroupError; };
struct BudgetExceeded : GroupError { using GroupError::GroupError; };
struct PreconditionFailed : GroupError { using GroupError::GroupError; };

// --- permutations ---
struct DegreeMismatch : GroupError { using GroupError::GroupError; };
struct DegreeTooLarge : GroupError { using GroupError::GroupError; };
struct OddPermutation : GroupError { using GroupError::GroupError; };

// --- projective matrices ---
struct SingularMatrix : Error { using Error::Error; };
struct OrderExceedsCap : Error { using Error::Error; };

// --- explicit constructions ---
struct WitnessInvalid : Error { using Error::Error; };
struct RelationFailed : Error { using Error::Error; };
struct UnexpectedStructure : Error { using Error::Error; };
struct ResultTooLarge : Error { using Error::Error; };

// --- field classification ---
struct InsufficientProfile : Error {
  explicit InsufficientProfile(const std::string& predicate)
      : Error("insufficient profile: predicate '" + predicate + "' is unknown"),
        missing(predicate) {}
  std::string missing;
};
struct InconsistentProfile : Error { using Error::Error; };
struct WitnessUnavailable : Error { using Error::Error; };
struct CertificationMismatch : Error { using Error::Error; };

// --- input parsing ---
struct ParseError : Error { using Error::Error; };

}  // namespace qj
