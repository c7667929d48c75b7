#include "qcorr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string toString(SearchMethod m) {
  switch (m) {
    case SearchMethod::Simplex: return "simplex";
    case SearchMethod::Annealing: return "annealing";
    case SearchMethod::Grid: return "grid";
  }
  return "simplex";
}

SearchMethod parseSearchMethod(const std::string& name) {
  if (name == "simplex") return SearchMethod::Simplex;
  if (name == "annealing") return SearchMethod::Annealing;
  if (name == "grid") return SearchMethod::Grid;
  throw InvalidArgument("unknown search method '" + name + "'");
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InvalidArgument("OptimizerConfig: restarts must be >= 1");
  if (!(tolerance > 0.0)) throw InvalidArgument("OptimizerConfig: tolerance must be > 0");
  if (maxIters < 1) throw InvalidArgument("OptimizerConfig: maxIters must be >= 1");
}

namespace {

double safeEval(const Objective& f, std::span<const double> x) {
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

}  // namespace

LocalResult nelderMead(const Objective& f, std::vector<double> x0, double step,
                       std::size_t maxIters, double tolerance) {
  const std::size_t n = x0.size();
  LocalResult result;
  if (n == 0) {
    result.value = safeEval(f, x0);
    result.evaluations = 1;
    result.converged = true;
    result.x = std::move(x0);
    return result;
  }

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(n + 1);
  std::size_t evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    values[i] = safeEval(f, simplex[i]);
    ++evals;
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> trial(n);
  std::vector<double> trial2(n);
  bool converged = false;

  for (std::size_t iter = 0; iter < maxIters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (values[worst] - values[best] <= tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& p = simplex[order[k]];
      for (std::size_t j = 0; j < n; ++j) centroid[j] += p[j];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    for (std::size_t j = 0; j < n; ++j)
      trial[j] = centroid[j] + kReflect * (centroid[j] - simplex[worst][j]);
    const double fr = safeEval(f, trial);
    ++evals;

    if (fr < values[best]) {
      for (std::size_t j = 0; j < n; ++j)
        trial2[j] = centroid[j] + kExpand * (trial[j] - centroid[j]);
      const double fe = safeEval(f, trial2);
      ++evals;
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    for (std::size_t j = 0; j < n; ++j) {
      trial2[j] = outside ? centroid[j] + kContract * (trial[j] - centroid[j])
                          : centroid[j] + kContract * (simplex[worst][j] - centroid[j]);
    }
    const double fc = safeEval(f, trial2);
    ++evals;
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      for (std::size_t j = 0; j < n; ++j)
        simplex[k][j] = simplex[best][j] + kShrink * (simplex[k][j] - simplex[best][j]);
      values[k] = safeEval(f, simplex[k]);
      ++evals;
    }
  }

  const auto bestIt = std::min_element(values.begin(), values.end());
  const std::size_t bestIdx = static_cast<std::size_t>(bestIt - values.begin());
  result.x = simplex[bestIdx];
  result.value = *bestIt;
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

LocalResult polishedNelderMead(const Objective& f, std::vector<double> x0, double step,
                               std::size_t maxIters, double tolerance, int polishRounds) {
  LocalResult best = nelderMead(f, std::move(x0), step, maxIters, tolerance);
  double s = step;
  for (int round = 0; round < polishRounds; ++round) {
    s *= 0.5;
    LocalResult next = nelderMead(f, best.x, s, maxIters, tolerance);
    const double gain = best.value - next.value;
    next.evaluations += best.evaluations;
    if (gain > 0.0) {
      best = std::move(next);
    } else {
      best.evaluations = next.evaluations;
    }
    if (gain < tolerance) break;
  }
  return best;
}

LocalResult anneal(const Objective& f, std::vector<double> x0, double step, std::size_t maxIters,
                   Rng& rng) {
  const std::size_t n = x0.size();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> current = std::move(x0);
  double fcur = safeEval(f, current);
  LocalResult best{current, fcur, 1, false};
  std::vector<double> proposal(n);
  const std::size_t steps = std::max<std::size_t>(maxIters * std::max<std::size_t>(n, 1), 1);
  const double t0 = 0.1;
  const double t1 = 1e-6;
  for (std::size_t k = 0; k < steps; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(steps);
    const double temperature = t0 * std::pow(t1 / t0, frac);
    const double width = step * std::max(0.02, 1.0 - frac);
    for (std::size_t j = 0; j < n; ++j) proposal[j] = current[j] + width * gauss(rng);
    const double fp = safeEval(f, proposal);
    ++best.evaluations;
    if (fp <= fcur || unit(rng) < std::exp((fcur - fp) / temperature)) {
      current = proposal;
      fcur = fp;
      if (fcur < best.value) {
        best.value = fcur;
        best.x = current;
      }
    }
  }
  best.converged = true;
  return best;
}

LocalResult gridSearch(const Objective& f, std::size_t n, double lower, double upper,
                       std::size_t pointsPerAxis, std::size_t maxIters, double tolerance) {
  if (n > 4) throw InvalidArgument("gridSearch: at most 4 parameters are supported");
  if (pointsPerAxis < 2) throw InvalidArgument("gridSearch: need at least 2 points per axis");
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= pointsPerAxis;
  std::vector<double> x(n);
  std::vector<double> bestX(n);
  double bestValue = std::numeric_limits<double>::max();
  const double h = (upper - lower) / static_cast<double>(pointsPerAxis - 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = lower + h * static_cast<double>(rem % pointsPerAxis);
      rem /= pointsPerAxis;
    }
    const double v = safeEval(f, x);
    if (v < bestValue) {
      bestValue = v;
      bestX = x;
    }
  }
  LocalResult refined = polishedNelderMead(f, bestX, h, maxIters, tolerance);
  refined.evaluations += total;
  return refined;
}

std::size_t unitaryParameterCount(std::size_t d) noexcept { return d * (d - 1); }

ComplexMatrix unitaryFromParameters(std::size_t d, std::span<const double> params) {
  if (params.size() != unitaryParameterCount(d))
    throw InvalidArgument("unitaryFromParameters: expected d(d-1) parameters");
  ComplexMatrix u = ComplexMatrix::identity(d);
  std::size_t p = 0;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      const double theta = params[p++];
      const double phi = params[p++];
      const double c = std::cos(theta);
      const Complex s = std::sin(theta) * std::polar(1.0, phi);
      // u <- u * G where G acts on columns j, k:
      //   G_jj = c, G_jk = -s, G_kj = conj(s), G_kk = c.
      for (std::size_t r = 0; r < d; ++r) {
        const Complex uj = u(r, j);
        const Complex uk = u(r, k);
        u(r, j) = uj * c + uk * std::conj(s);
        u(r, k) = -uj * s + uk * c;
      }
    }
  }
  return u;
}

bool isometryFromParameters(std::size_t nOut, std::size_t d, std::span<const double> params,
                            ComplexMatrix& isometry) {
  if (params.size() != 2 * nOut * d)
    throw InvalidArgument("isometryFromParameters: expected 2 nOut d parameters");
  ComplexMatrix z(nOut, d);
  for (std::size_t r = 0; r < nOut; ++r)
    for (std::size_t c = 0; c < d; ++c)
      z(r, c) = Complex(params[2 * (r * d + c)], params[2 * (r * d + c) + 1]);
  return orthonormalizeColumns(z, isometry, 1e-6);
}

std::vector<double> isometryParametersFromRows(std::size_t nOut, const ComplexMatrix& topRows) {
  const std::size_t d = topRows.rows();
  if (nOut < d) throw InvalidArgument("isometryParametersFromRows: nOut must be >= d");
  std::vector<double> params(2 * nOut * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      params[2 * (r * d + c)] = topRows(r, c).real();
      params[2 * (r * d + c) + 1] = topRows(r, c).imag();
    }
  return params;
}

}  // namespace qcorr
