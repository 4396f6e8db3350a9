#pragma once

#include <cstddef>
#include <vector>

namespace labelshift {

// A K-vector of reals.  Probability vectors (class priors, posterior rows,
// Dirichlet means) are plain Vec values validated where they are built.
using Vec = std::vector<double>;

constexpr double kDefaultEpsFloor = 1e-10;
constexpr double kSimplexSumTol = 1e-9;

// True when v has K >= 2 nonnegative components summing to 1 within tol.
bool is_simplex(const Vec& v, double tol = kSimplexSumTol);

// Throws validation_error naming `what` when is_simplex fails.
void check_simplex(const Vec& v, const char* what, double tol = kSimplexSumTol);

// Clamp every component below at eps_floor, then divide by the new sum.
// Requires at least one positive component and eps_floor in (0, 1/K).
Vec renormalize_with_floor(Vec v, double eps_floor = kDefaultEpsFloor);

// KL(p_true || p_est) with the 0 log(0/q) = 0 convention.  Returns +inf when
// p_true_j > 0 meets p_est_j == 0.  Rounding-level negatives clamp to 0.
double kl_divergence(const Vec& p_true, const Vec& p_est);

Vec uniform_simplex(std::size_t k);

// Index of the largest component; ties break to the lowest index.
std::size_t argmax_index(const Vec& v);

}  // namespace labelshift
