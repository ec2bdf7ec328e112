#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

using std::complex;

double spectral_radius(const Eigen::VectorXcd& eig) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) r = std::max(r, std::abs(eig[i]));
  return r;
}

struct SpectrumView {
  Eigen::VectorXcd eig;
  double eps_im = 0.0;
  double eps_gap = 0.0;
  std::vector<complex<double>> reals;   // |im| <= eps_im, ascending real part
  std::vector<complex<double>> uppers;  // im > eps_im, sorted by (re, im)
};

SpectrumView inspect(const Eigen::MatrixXd& H, const Tolerances& tol) {
  SpectrumView v;
  v.eig = spectrum(H);
  const double scale = 1.0 + spectral_radius(v.eig);
  v.eps_im = tol.im_base * scale;
  v.eps_gap = tol.gap_base * scale;
  int lowers = 0;
  for (Eigen::Index i = 0; i < v.eig.size(); ++i) {
    const complex<double> z = v.eig[i];
    if (std::abs(z.imag()) <= v.eps_im)
      v.reals.push_back(z);
    else if (z.imag() > 0)
      v.uppers.push_back(z);
    else
      ++lowers;
  }
  if (lowers != static_cast<int>(v.uppers.size()))
    throw NumericalFailure("spectrum is not closed under conjugation");
  return v;
}

// Greedy global assignment on ascending (distance, i, j); each left item
// receives `capacity` right items.
std::vector<std::vector<int>> assign_greedy(int n_left, int n_right,
                                            const std::vector<std::vector<double>>& dist,
                                            int capacity) {
  std::vector<std::tuple<double, int, int>> edges;
  edges.reserve(static_cast<size_t>(n_left) * n_right);
  for (int i = 0; i < n_left; ++i)
    for (int j = 0; j < n_right; ++j) edges.emplace_back(dist[i][j], i, j);
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<int>> picked(n_left);
  std::vector<char> taken(n_right, 0);
  for (const auto& [d, i, j] : edges) {
    if (taken[j] || static_cast<int>(picked[i].size()) >= capacity) continue;
    taken[j] = 1;
    picked[i].push_back(j);
  }
  return picked;
}

std::string format_lambda(double lambda) {
  std::ostringstream os;
  os.precision(12);
  os << lambda;
  return os.str();
}

// A complexified pair under tracking: the upper-half-plane representative and
// the two path ids bound to it.
struct ComplexTrack {
  complex<double> rep;
  int low_id = 0;
  int high_id = 0;
};

}  // namespace

Eigen::VectorXcd spectrum(const Eigen::MatrixXd& H) {
  if (H.rows() != H.cols()) throw std::invalid_argument("spectrum needs a square matrix");
  if (H.rows() < 1 || H.rows() > 64)
    throw std::invalid_argument("spectrum supports 1 <= N <= 64");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(H, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eigenvalue iteration did not converge");
  Eigen::VectorXcd eig = solver.eigenvalues();
  std::sort(eig.data(), eig.data() + eig.size(),
            [](const complex<double>& a, const complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return eig;
}

std::vector<EigenPath> track_paths(const MatrixFamily& fam, double lambda_max,
                                   int grid_steps, const Tolerances& tol) {
  const int n = fam.dimension();
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("family dimension must be even, >= 2");
  if (fam.A.rows() != n || fam.A.cols() != n || fam.B.rows() != n || fam.B.cols() != n)
    throw std::invalid_argument("A and B must both be N x N");
  if (grid_steps < 2) throw std::invalid_argument("grid_steps must be >= 2");
  if (!(lambda_max > 0.0)) throw std::invalid_argument("lambda_max must be positive");

  const SpectrumView start = inspect(fam.A, tol);
  if (static_cast<int>(start.reals.size()) != n)
    throw DegenerateStart("H(0) has non-real eigenvalues");
  for (int i = 0; i + 1 < n; ++i)
    if (start.reals[i + 1].real() - start.reals[i].real() <= start.eps_gap)
      throw DegenerateStart("eigenvalues " + std::to_string(i + 1) + " and " +
                            std::to_string(i + 2) + " of H(0) are not separated");

  std::vector<EigenPath> paths(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    paths[i].path_id = i + 1;
    paths[i].samples.push_back({0.0, start.reals[i]});
  }

  // Alive paths stay sorted by current value: monotone matching against the
  // sorted real eigenvalues is then the minimal-total-displacement assignment.
  std::vector<int> alive(static_cast<size_t>(n));  // 0-based path indices
  for (int i = 0; i < n; ++i) alive[i] = i;
  std::vector<ComplexTrack> tracks;

  for (int step = 1; step <= grid_steps; ++step) {
    const double lambda = lambda_max * step / grid_steps;
    const SpectrumView cur = inspect(fam.at(lambda), tol);

    // Continue existing complex tracks; leftovers are newly emerged pairs.
    if (cur.uppers.size() < tracks.size())
      throw NumericalFailure("a complex-conjugate pair returned to the real axis near lambda = " +
                             format_lambda(lambda) +
                             "; the family is outside the pairwise-merger class");
    std::vector<char> continued(cur.uppers.size(), 0);
    if (!tracks.empty()) {
      std::vector<std::vector<double>> dist(tracks.size(),
                                            std::vector<double>(cur.uppers.size()));
      for (size_t t = 0; t < tracks.size(); ++t)
        for (size_t u = 0; u < cur.uppers.size(); ++u)
          dist[t][u] = std::abs(cur.uppers[u] - tracks[t].rep);
      const auto picked = assign_greedy(static_cast<int>(tracks.size()),
                                        static_cast<int>(cur.uppers.size()), dist, 1);
      for (size_t t = 0; t < tracks.size(); ++t) {
        tracks[t].rep = cur.uppers[picked[t][0]];
        continued[picked[t][0]] = 1;
      }
    }
    std::vector<complex<double>> emerging;
    for (size_t u = 0; u < cur.uppers.size(); ++u)
      if (!continued[u]) emerging.push_back(cur.uppers[u]);

    if (cur.reals.size() != alive.size() - 2 * emerging.size())
      throw NumericalFailure("real eigenvalue count changed inconsistently near lambda = " +
                             format_lambda(lambda));

    // Each emerging pair claims the two alive paths closest to its real part.
    if (!emerging.empty()) {
      std::vector<std::vector<double>> dist(emerging.size(), std::vector<double>(alive.size()));
      for (size_t e = 0; e < emerging.size(); ++e)
        for (size_t p = 0; p < alive.size(); ++p)
          dist[e][p] =
              std::abs(paths[alive[p]].samples.back().value.real() - emerging[e].real());
      const auto picked = assign_greedy(static_cast<int>(emerging.size()),
                                        static_cast<int>(alive.size()), dist, 2);
      std::vector<char> dying(alive.size(), 0);
      for (size_t e = 0; e < emerging.size(); ++e) {
        int a = alive[picked[e][0]];
        int b = alive[picked[e][1]];
        if (paths[a].path_id > paths[b].path_id) std::swap(a, b);
        for (int idx : {a, b}) {
          paths[idx].death_step = step;
          paths[idx].alive_until = lambda;
        }
        paths[a].partner = paths[b].path_id;
        paths[b].partner = paths[a].path_id;
        tracks.push_back({emerging[e], paths[a].path_id, paths[b].path_id});
        dying[picked[e][0]] = 1;
        dying[picked[e][1]] = 1;
      }
      std::vector<int> still;
      still.reserve(alive.size() - 2 * emerging.size());
      for (size_t p = 0; p < alive.size(); ++p)
        if (!dying[p]) still.push_back(alive[p]);
      alive = std::move(still);
    }

    for (size_t p = 0; p < alive.size(); ++p)
      paths[alive[p]].samples.push_back({lambda, cur.reals[p]});
    for (const auto& t : tracks) {
      paths[t.low_id - 1].samples.push_back({lambda, t.rep});
      paths[t.high_id - 1].samples.push_back({lambda, std::conj(t.rep)});
    }
  }

  for (int idx : alive) paths[idx].alive_until = lambda_max;
  return paths;
}

namespace {

// Counts real eigenvalues inside the duo's value corridor [lo_v, hi_v].
int corridor_real_count(const MatrixFamily& fam, double lambda, double lo_v, double hi_v,
                        const Tolerances& tol) {
  const SpectrumView v = inspect(fam.at(lambda), tol);
  int count = 0;
  for (const auto& z : v.reals)
    if (z.real() >= lo_v && z.real() <= hi_v) ++count;
  return count;
}

}  // namespace

std::vector<ConfluenceEvent> detect_confluences(const std::vector<EigenPath>& paths,
                                                const MatrixFamily& fam,
                                                const Tolerances& tol) {
  struct Pending {
    int low_id, high_id, step;
  };
  std::vector<Pending> duos;
  for (const auto& p : paths)
    if (!p.alive() && p.path_id < p.partner) duos.push_back({p.path_id, p.partner, p.death_step});

  std::vector<ConfluenceEvent> events;
  std::vector<double> gaps;  // effective gap tolerance at each event, for the checks below
  for (const auto& duo : duos) {
    const EigenPath& a = paths[duo.low_id - 1];
    const EigenPath& b = paths[duo.high_id - 1];
    const PathSample& last_a = a.samples[duo.step - 1];
    const PathSample& last_b = b.samples[duo.step - 1];
    double u = last_a.value.real();
    double v = last_b.value.real();
    if (u > v) std::swap(u, v);

    double lo = last_a.lambda;
    double hi = a.samples[duo.step].lambda;
    // The corridor is pinned from the interval start; the merging pair stays
    // inside it while foreign paths stay outside for grids that separate
    // events.
    const SpectrumView at_lo = inspect(fam.at(lo), tol);
    const double slack = at_lo.eps_gap;
    const double lo_v = u - slack;
    const double hi_v = v + slack;
    if (corridor_real_count(fam, hi, lo_v, hi_v, tol) >= 2)
      throw NumericalFailure("could not isolate the merger of paths " +
                             std::to_string(duo.low_id) + " and " + std::to_string(duo.high_id) +
                             " inside its grid interval; refine the grid");
    while (hi - lo > tol.lambda) {
      const double mid = 0.5 * (lo + hi);
      if (corridor_real_count(fam, mid, lo_v, hi_v, tol) >= 2)
        lo = mid;
      else
        hi = mid;
    }

    ConfluenceEvent ev;
    ev.lambda_star = 0.5 * (lo + hi);
    ev.paths = {duo.low_id, duo.high_id};
    // Common real part just above lambda_star: the nearest complex pair to the
    // corridor center at the dead end of the final bracket.
    const SpectrumView after = inspect(fam.at(hi), tol);
    const double mid_v = 0.5 * (u + v);
    bool found = false;
    double best = 0.0;
    for (const auto& z : after.uppers) {
      if (!found || std::abs(z.real() - mid_v) < std::abs(best - mid_v)) {
        best = z.real();
        found = true;
      }
    }
    ev.value = found ? best : mid_v;
    events.push_back(ev);
    gaps.push_back(std::max(at_lo.eps_gap, after.eps_gap));
  }

  for (size_t i = 0; i < events.size(); ++i) {
    for (size_t j = i + 1; j < events.size(); ++j) {
      if (std::abs(events[i].lambda_star - events[j].lambda_star) > tol.lambda) continue;
      const bool shared = events[i].paths.first == events[j].paths.first ||
                          events[i].paths.first == events[j].paths.second ||
                          events[i].paths.second == events[j].paths.first ||
                          events[i].paths.second == events[j].paths.second;
      const double gap = std::max(gaps[i], gaps[j]);
      if (shared)
        throw DegenerateMerger("coinciding mergers share path " +
                               std::to_string(events[i].paths.first));
      if (std::abs(events[i].value - events[j].value) <= gap)
        throw DegenerateMerger(
            "four eigenvalues coalesce near lambda = " + format_lambda(events[i].lambda_star) +
            ", value = " + format_lambda(events[i].value) +
            "; multiple mergers are outside the supported class");
    }
  }

  std::sort(events.begin(), events.end(), [](const ConfluenceEvent& x, const ConfluenceEvent& y) {
    if (x.lambda_star != y.lambda_star) return x.lambda_star < y.lambda_star;
    if (x.value != y.value) return x.value < y.value;
    return x.paths < y.paths;
  });
  return events;
}

ObservedPattern assemble_observed(std::vector<ConfluenceEvent> events, int dimension,
                                  bool symmetric_hint) {
  std::sort(events.begin(), events.end(), [](const ConfluenceEvent& x, const ConfluenceEvent& y) {
    if (x.lambda_star != y.lambda_star) return x.lambda_star < y.lambda_star;
    if (x.value != y.value) return x.value < y.value;
    return x.paths < y.paths;
  });
  std::vector<MergerPattern::Pair> pairs;
  pairs.reserve(events.size());
  for (const auto& ev : events) pairs.emplace_back(ev.paths);
  MergerPattern pattern = MergerPattern::from_pairs(std::move(pairs));
  if (pattern.size() != dimension)
    throw NumericalFailure("event pairs do not cover all " + std::to_string(dimension) +
                           " levels");

  auto describe = [&events] {
    std::ostringstream os;
    for (const auto& ev : events)
      os << " (" << ev.paths.first << "," << ev.paths.second << ") at lambda "
         << format_lambda(ev.lambda_star) << " value " << format_lambda(ev.value) << ";";
    return os.str();
  };
  if (!is_noncrossing(pattern))
    throw CrossingPattern("observed pattern " + format_symbol(pattern) +
                          " has crossing pairs; events:" + describe());
  if (symmetric_hint && !is_centrally_symmetric(pattern))
    throw CrossingPattern("observed pattern " + format_symbol(pattern) +
                          " is not centrally symmetric despite the family hint; events:" +
                          describe());
  return ObservedPattern{std::move(pattern), std::move(events)};
}

ObservedPattern classify(const MatrixFamily& fam, double lambda_max, int grid_steps,
                         const Tolerances& tol) {
  const auto paths = track_paths(fam, lambda_max, grid_steps, tol);
  std::string alive_ids;
  for (const auto& p : paths)
    if (p.alive()) alive_ids += (alive_ids.empty() ? "" : ", ") + std::to_string(p.path_id);
  if (!alive_ids.empty())
    throw IncompleteSweep("paths still real at lambda_max = " + format_lambda(lambda_max) +
                          ": " + alive_ids);
  auto events = detect_confluences(paths, fam, tol);
  return assemble_observed(std::move(events), fam.dimension(), fam.symmetric_hint);
}

MatrixFamily build_witness(const MergerPattern& p) {
  if (!is_noncrossing(p))
    throw CrossingPattern("witness construction requires a non-crossing pattern, got " +
                          format_symbol(p));
  if (!is_centrally_symmetric(p))
    throw NotSymmetric("witness construction requires a centrally symmetric pattern, got " +
                       format_symbol(p));

  const int n = p.size();
  MatrixFamily fam;
  fam.A = Eigen::MatrixXd::Zero(n, n);
  fam.B = Eigen::MatrixXd::Zero(n, n);
  fam.symmetric_hint = true;
  const double center = 0.5 * (n + 1);
  int row = 0;
  for (auto [a, b] : p.pairs()) {
    int depth = 0;
    for (auto [a2, b2] : p.pairs())
      if (a2 < a && b2 > b) ++depth;
    const double mu = 0.5 * (a + b) - center;
    const double c = 0.5 * (b - a);
    const double g = std::ldexp(1.0, depth);  // deeper arches complexify first
    fam.A(row, row) = mu + c;
    fam.A(row + 1, row + 1) = mu - c;
    fam.B(row, row + 1) = g;
    fam.B(row + 1, row) = -g;
    row += 2;
  }
  return fam;
}

double suggested_lambda_max(const MergerPattern& p) {
  double last = 0.0;
  for (auto [a, b] : p.pairs()) {
    int depth = 0;
    for (auto [a2, b2] : p.pairs())
      if (a2 < a && b2 > b) ++depth;
    last = std::max(last, 0.5 * (b - a) / std::ldexp(1.0, depth));
  }
  return 1.25 * last;
}

bool check_central_symmetry(const MatrixFamily& fam, const std::vector<double>& lambdas,
                            const Tolerances& tol, double* worst_deviation) {
  const int n = fam.dimension();
  const double center = fam.A.trace() / n;  // mean eigenvalue at lambda = 0
  double worst = 0.0;
  bool ok = true;
  for (double lambda : lambdas) {
    const SpectrumView v = inspect(fam.at(lambda), tol);
    std::vector<complex<double>> mirrored(v.eig.data(), v.eig.data() + v.eig.size());
    for (auto& z : mirrored) z = 2.0 * center - z;
    std::sort(mirrored.begin(), mirrored.end(),
              [](const complex<double>& x, const complex<double>& y) {
                if (x.real() != y.real()) return x.real() < y.real();
                return x.imag() < y.imag();
              });
    for (Eigen::Index i = 0; i < v.eig.size(); ++i) {
      const double dev = std::abs(v.eig[i] - mirrored[static_cast<size_t>(i)]);
      worst = std::max(worst, dev);
      if (dev > v.eps_im) ok = false;
    }
  }
  if (worst_deviation) *worst_deviation = worst;
  return ok;
}

}  // namespace spectra
