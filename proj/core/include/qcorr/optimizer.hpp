#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

enum class SearchMethod { Simplex, Annealing, Grid };

std::string toString(SearchMethod m);
SearchMethod parseSearchMethod(const std::string& name);

struct OptimizerConfig {
  std::size_t restarts = 32;
  std::size_t maxIters = 400;
  double tolerance = 1e-7;
  std::uint64_t seed = 0;
  SearchMethod method = SearchMethod::Simplex;

  /// Throws InvalidArgument when restarts == 0 or tolerance <= 0.
  void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;  ///< objective value at x (minimized)
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead minimization started from an axis-aligned simplex of size `step`.
/// Stops when the spread of simplex values drops below `tolerance` or after
/// `maxIters` iterations.
LocalResult nelderMead(const Objective& f, std::vector<double> x0, double step,
                       std::size_t maxIters, double tolerance);

/// Nelder-Mead followed by fresh-simplex restarts from the incumbent until a
/// restart improves by less than `tolerance` (at most `polishRounds` times).
LocalResult polishedNelderMead(const Objective& f, std::vector<double> x0, double step,
                               std::size_t maxIters, double tolerance, int polishRounds = 4);

/// Metropolis annealing with Gaussian proposals and a geometric schedule.
LocalResult anneal(const Objective& f, std::vector<double> x0, double step, std::size_t maxIters,
                   Rng& rng);

/// Exhaustive grid over [lower, upper]^n with `pointsPerAxis` points per
/// coordinate (n <= 4), then Nelder-Mead from the best grid point.
LocalResult gridSearch(const Objective& f, std::size_t n, double lower, double upper,
                       std::size_t pointsPerAxis, std::size_t maxIters, double tolerance);

/// Number of real parameters of the unitary chart in dimension d: d(d-1).
std::size_t unitaryParameterCount(std::size_t d) noexcept;

/// Product of two-level rotations G(j,k; theta, phi) over j < k in lexicographic
/// order. The all-zero parameter vector maps to the identity; the chart covers
/// every unitary up to a diagonal phase matrix on the right, which projective
/// measurements do not see.
ComplexMatrix unitaryFromParameters(std::size_t d, std::span<const double> params);

/// Rows of the returned nOut x d matrix are orthonormal-column isometry rows
/// <K_s|. Parameters are the real and imaginary parts of an unconstrained
/// nOut x d matrix (2 nOut d reals). Returns false if the matrix is
/// numerically rank deficient.
bool isometryFromParameters(std::size_t nOut, std::size_t d, std::span<const double> params,
                            ComplexMatrix& isometry);

/// Parameter vector for isometryFromParameters whose first d rows are
/// `topRows` (a d x d unitary) and whose remaining rows are zero. Passing
/// U^dagger reproduces the projective measurement onto the columns of U.
std::vector<double> isometryParametersFromRows(std::size_t nOut, const ComplexMatrix& topRows);

}  // namespace qcorr
