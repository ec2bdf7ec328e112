#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "spectra/matchings.hpp"

namespace spectra {

/// Scale-aware numerical thresholds. The effective reality and gap tolerances
/// are im_base * (1 + spectral radius) and gap_base * (1 + spectral radius) of
/// the matrix under inspection; lambda is the merger localization tolerance.
struct Tolerances {
  double im_base = 1e-8;
  double gap_base = 1e-8;
  double lambda = 1e-6;
};

/// One-parameter family H(lambda) = A + lambda * B of real N x N matrices.
struct MatrixFamily {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  bool symmetric_hint = false;

  int dimension() const { return static_cast<int>(A.rows()); }
  Eigen::MatrixXd at(double lambda) const { return A + lambda * B; }
};

/// All eigenvalues of a real dense matrix (N <= 64), with multiplicity,
/// sorted by real part then imaginary part. Non-real eigenvalues of a real
/// input come in conjugate pairs. Throws NumericalFailure on non-convergence.
Eigen::VectorXcd spectrum(const Eigen::MatrixXd& H);

struct PathSample {
  double lambda = 0.0;
  std::complex<double> value;
};

/// A continuity-tracked eigenvalue trajectory. path_id is the rank of the
/// eigenvalue at lambda = 0 (1 = lowest); the label never changes afterwards.
/// After complexification the path keeps sampling its branch of the
/// complex-conjugate pair (the lower path id takes the upper half plane).
struct EigenPath {
  int path_id = 0;
  std::vector<PathSample> samples;
  double alive_until = 0.0;  // lambda of the first complex sample, or lambda_max
  int death_step = -1;       // grid index of the first complex sample, -1 if alive
  int partner = 0;           // path id it complexified with, 0 while alive

  bool alive() const { return death_step < 0; }
};

/// Tracks all 2J eigenvalue paths over lambda in [0, lambda_max] on a uniform
/// grid with grid_steps intervals. Real eigenvalues are assigned to alive
/// paths by minimal-total-displacement matching against the previous step;
/// when a complex-conjugate pair emerges, the two alive paths whose previous
/// values are closest to its common real part are marked dead in that
/// interval. Throws DegenerateStart if H(0) lacks 2J separated real
/// eigenvalues and NumericalFailure if the spectrum evolves outside the
/// pairwise-merger class (for example a pair returning to the real axis).
std::vector<EigenPath> track_paths(const MatrixFamily& fam, double lambda_max,
                                   int grid_steps, const Tolerances& tol = {});

/// A pairwise confluence: at lambda_star the two paths merge at `value` and
/// leave the real axis.
struct ConfluenceEvent {
  double lambda_star = 0.0;
  std::pair<int, int> paths;  // path ids, smaller first
  double value = 0.0;         // common real part just above lambda_star
};

/// One event per dead path pair, lambda_star refined by bisection on the
/// real-eigenvalue count inside the pair's value corridor, to tol.lambda.
/// Throws DegenerateMerger for coinciding events that share a path or for a
/// four-or-more-fold coalescence within the gap tolerance.
std::vector<ConfluenceEvent> detect_confluences(const std::vector<EigenPath>& paths,
                                                const MatrixFamily& fam,
                                                const Tolerances& tol = {});

struct ObservedPattern {
  MergerPattern pattern;
  std::vector<ConfluenceEvent> events;  // ascending (lambda_star, value)
};

/// Pattern assembly and validation step of classify, exposed for direct
/// testing. Throws CrossingPattern if the event pairs cross, or if
/// symmetric_hint is set and the pattern is not centrally symmetric.
ObservedPattern assemble_observed(std::vector<ConfluenceEvent> events, int dimension,
                                  bool symmetric_hint);

/// Full pipeline: track, detect, assemble. Throws IncompleteSweep if some
/// paths are still real at lambda_max (the message names them).
ObservedPattern classify(const MatrixFamily& fam, double lambda_max, int grid_steps,
                         const Tolerances& tol = {});

/// Block-diagonal family realizing a centrally symmetric non-crossing
/// pattern: each pair {a,b} becomes a 2x2 block with eigenvalues
/// mu +- sqrt(c^2 - g^2 lambda^2), mu = (a+b)/2 - (2J+1)/2, c = (b-a)/2,
/// and coupling g = 2^depth so deeper arches complexify first. Mirror pairs
/// get mirrored mu and identical (c, g). Throws CrossingPattern /
/// NotSymmetric on precondition violations.
MatrixFamily build_witness(const MergerPattern& p);

/// A lambda beyond every merger of build_witness(p), with a 25% margin.
double suggested_lambda_max(const MergerPattern& p);

/// True iff at every sampled lambda the spectrum is invariant under
/// z -> (c_lower + c_upper) - z within the reality tolerance, with the center
/// estimated as the mean eigenvalue at lambda = 0. Never throws on asymmetry;
/// the worst deviation seen is written to *worst_deviation when given.
bool check_central_symmetry(const MatrixFamily& fam, const std::vector<double>& lambdas,
                            const Tolerances& tol = {}, double* worst_deviation = nullptr);

}  // namespace spectra
