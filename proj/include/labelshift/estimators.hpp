#pragma once

#include <cstdint>
#include <optional>

#include "labelshift/simplex.hpp"

namespace labelshift {

// Row-major N x K matrix of classifier soft outputs; every row a probability
// vector over the K classes.
struct PosteriorBatch {
    std::size_t k = 0;
    std::vector<double> data;  // rows() * k, row-major

    std::size_t rows() const { return k == 0 ? 0 : data.size() / k; }
    const double* row(std::size_t i) const { return data.data() + i * k; }
    double* row(std::size_t i) { return data.data() + i * k; }

    void append_row(const Vec& f);
    // Throws validation_error unless every row is a simplex vector within tol.
    void validate(double tol = 1e-6) const;
};

enum class AlphaMode { GA, LSF, Frozen };

struct EstimatorConfig {
    int t_max = 100;        // EM iterations
    double mu = 0.05;       // GA learning rate
    int t_grad = 20;        // GA inner iterations
    double c = 1e4;         // LSF constant, must exceed K
    double gamma = 0.95;    // online confidence, (0, 1)
    AlphaMode alpha_mode = AlphaMode::LSF;
    double eps_floor = kDefaultEpsFloor;
    double q_tol = 1e-8;    // Q-improvement stop; 0 runs exactly t_max loops

    void validate(std::size_t k) const;
};

struct EstimateReport {
    Vec pi;
    Vec alpha;
    std::vector<double> q_trace;   // batch: Q(theta^{t+1}; theta^t) per iteration
    std::vector<double> kl_trace;  // KL(reference || pi) per iteration/sample,
                                   // including the initial uniform point; only
                                   // filled when a reference prior is supplied
    int iterations = 0;
    double wall_time_seconds = 0.0;
};

struct BatchEstimatorState {
    Vec pi;     // pi^(t)
    Vec alpha;  // alpha^(t)
    int iteration = 0;
    std::vector<double> q_trace;
};

struct OnlineEstimatorState {
    Vec pi;
    Vec alpha;
    std::int64_t tau = 0;  // samples processed
    std::optional<std::size_t> prev_pseudo_label;
    Vec running_mean_posterior;  // mean of all rows seen so far
};

// pi^(0) = 1/K, alpha^(0) = 1.
BatchEstimatorState make_batch_state(std::size_t k);
OnlineEstimatorState make_online_state(std::size_t k);

// r_j = (pi_j / eps_j) f_j / sum_k (pi_k / eps_k) f_k.
Vec reweight_posterior(const Vec& f, const Vec& pi, const Vec& eps_train);
Vec reweight_posterior(const double* f, std::size_t k, const Vec& pi,
                       const Vec& eps_train);

// Expected complete-data log-posterior at (pi, alpha), conditioning the
// responsibilities on pi_t (the constant term is dropped; only differences
// of Q matter).  Returns -inf when pi_j == 0 meets a positive coefficient.
double q_function(const Vec& pi, const Vec& alpha, const Vec& pi_t,
                  const PosteriorBatch& batch, const Vec& eps_train);

// Closed-form pi M-step: numerator_j = alpha_j - 1 + sum_i r_ij, clamped at
// zero, normalized, then floored.  Throws numerical_error when every
// numerator vanishes (cannot happen with alpha >= 1).
Vec pi_update_batch(const BatchEstimatorState& state, const PosteriorBatch& batch,
                    const Vec& eps_train, double eps_floor = kDefaultEpsFloor);

// t_grad synchronous gradient-ascent steps
//   alpha_j += mu * (-psi(alpha_j) + psi(sum alpha) + log pi_j),
// clamping any component driven below zero to 1e-6.
Vec alpha_update_ga(Vec alpha, const Vec& pi_next, double mu, int t_grad);

// alpha = (c / max(pi)) * pi; the maximal component equals c exactly.
Vec alpha_update_lsf(const Vec& pi_next, double c);

// Per-component gradient of the alpha objective at the LSF point:
// -psi(c_hat pi_j) + psi(c_hat) + log pi_j.  Diagnostic only.
Vec alpha_grad_residual(const Vec& pi, double c);

// Batch EM (uniform initialization, T_max iterations of E-step, pi update,
// alpha update per config.alpha_mode, optional early stop on Q improvement).
// When reference_prior is non-null the report carries a KL trace.
EstimateReport fmapls(const PosteriorBatch& batch, const Vec& eps_train,
                      const EstimatorConfig& config,
                      const Vec* reference_prior = nullptr);

// The alpha == 1 degenerate case: the identical loop with the Dirichlet
// parameter frozen at the all-ones vector (classic label-shift EM).
EstimateReport mlls(const PosteriorBatch& batch, const Vec& eps_train, int t_max,
                    const Vec* reference_prior = nullptr);

// One streaming update: reweight f_new under the current state, interpolate
// with the previous pseudo-label indicator (uniform before the first
// sample), renormalize, refresh alpha by LSF, advance the pseudo-label and
// the running posterior mean.  O(K).
OnlineEstimatorState online_step(OnlineEstimatorState state, const double* f_new,
                                 std::size_t k, const Vec& eps_train,
                                 const EstimatorConfig& config);
OnlineEstimatorState online_step(OnlineEstimatorState state, const Vec& f_new,
                                 const Vec& eps_train, const EstimatorConfig& config);

// Folds online_step over the rows of `stream` from the uniform initialization.
EstimateReport online_fmapls(const PosteriorBatch& stream, const Vec& eps_train,
                             const EstimatorConfig& config,
                             const Vec* reference_prior = nullptr);

}  // namespace labelshift
