#pragma once

#include <stdexcept>
#include <string>

namespace qmb {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point was fed to a space whose carrier cannot hold it.
struct CarrierMismatchError : Error {
    using Error::Error;
};

// A distance or characteristic function produced NaN, an infinity, or a
// negative value.  This signals a broken implementation, not a failed
// mathematical property, so checks abort instead of recording a witness.
struct ContractViolationError : Error {
    using Error::Error;
};

// Set-distance queries against an empty set.
struct EmptySetError : Error {
    using Error::Error;
};

// Base refinement could not find a strictly larger member within the
// search budget (either the family has a maximal set or the budget is
// too small; the two are indistinguishable by a finite search).
struct BaseRefinementError : Error {
    using Error::Error;
};

// No delta in the supplied grid satisfies the neighborhood criterion.
struct DeltaSearchError : Error {
    using Error::Error;
};

// metric_from_char detected an asymmetric input distance.
struct AsymmetryError : Error {
    using Error::Error;
};

// A point could not be assigned to a band within the index budget.
struct BandAssignmentError : Error {
    using Error::Error;
};

// f_n(x)+g_n(x) vanished inside the characteristic-function construction.
struct ZeroDenominatorError : Error {
    using Error::Error;
};

// Malformed configuration, unknown ids, bad CLI arguments.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qmb
