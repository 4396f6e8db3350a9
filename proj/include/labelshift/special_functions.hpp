#pragma once

#include <vector>

namespace labelshift {

// Digamma psi(x) for x > 0.  Upward recurrence psi(x) = psi(x+1) - 1/x until
// the argument reaches the asymptotic region, then the expansion
//   ln x - 1/(2x) - 1/(12 x^2) + 1/(120 x^4) - 1/(252 x^6).
// Absolute error stays below 1e-10 on [1e-3, 1e6].
double digamma(double x);

// log B(alpha) = sum_i lgamma(alpha_i) - lgamma(sum_i alpha_i), entirely in
// log space.  Requires every alpha_i > 0.
double log_beta(const std::vector<double>& alpha);

// log Dir(pi; alpha) = -log B(alpha) + sum_i (alpha_i - 1) log pi_i.
// Returns -inf when some pi_i == 0 meets alpha_i > 1, +inf for alpha_i < 1
// (the density diverges there); alpha_i == 1 contributes nothing either way.
double dirichlet_log_pdf(const std::vector<double>& pi,
                         const std::vector<double>& alpha);

}  // namespace labelshift
