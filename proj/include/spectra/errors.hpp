#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Enumeration request above the configured cap (resource guard, not a math failure).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed pattern-symbol text.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Text parsed but does not denote a perfect matching (duplicate/missing index, a == b).
class InvalidMatching : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Eigenvalues of H(0) are not real and pairwise separated.
class DegenerateStart : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Eigensolver non-convergence or an inconsistent spectrum during tracking.
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Coinciding mergers that share a path, or a >= 4-fold coalescence.
class DegenerateMerger : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Some eigenvalue paths are still real at the end of the sweep.
class IncompleteSweep : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Observed (or requested) pairs violate the non-crossing or symmetry constraint.
class CrossingPattern : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Witness request for a pattern that is not centrally symmetric.
class NotSymmetric : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectra
