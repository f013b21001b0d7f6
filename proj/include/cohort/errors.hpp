#pragma once

#include <stdexcept>

namespace cohort {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data loading and validation.
struct MissingColumn : Error { using Error::Error; };
struct UnparseableMonth : Error { using Error::Error; };
struct NegativeCount : Error { using Error::Error; };
struct ActiveExceedsTotal : Error { using Error::Error; };
struct DuplicateCell : Error { using Error::Error; };
struct PeriodBeforeCohort : Error { using Error::Error; };
struct InconsistentRevenue : Error { using Error::Error; };
struct RowLimitExceeded : Error { using Error::Error; };
struct DegenerateFeature : Error { using Error::Error; };
struct EmptySplit : Error { using Error::Error; };

// Numerics and samplers.
struct DomainError : Error { using Error::Error; };
struct NonFiniteLogPost : Error { using Error::Error; };
struct StuckChain : Error { using Error::Error; };
struct TooFewDraws : Error { using Error::Error; };
struct TooFewChains : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct NoUsableRows : Error { using Error::Error; };
struct OverflowGuard : Error { using Error::Error; };
struct DrawMismatch : Error { using Error::Error; };
struct JoinMismatch : Error { using Error::Error; };

}  // namespace cohort
