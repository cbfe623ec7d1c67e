#pragma once

#include <stdexcept>
#include <string>

namespace lgriffiths {

/// An index tuple outside the admissible domain of an identity or evaluation.
/// Signals a caller indexing error; identities are never silently skipped.
class OutOfDomain : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Parameters that make a definition or a printed coefficient undefined
/// (p in {0,1}, lambda = 0, a vanishing coefficient denominator).
class DegenerateParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The oscillator low-index matching system could not be solved.
class FitFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lgriffiths
