#pragma once

#include "labelshift/estimators.hpp"
#include "labelshift/simplex.hpp"

namespace labelshift {

// Fisher information for the free coordinates pi_1..pi_{K-1} (the last class
// is eliminated by the simplex constraint):  F = diag(d) + s * 11^T.
struct FisherMatrix {
    Vec d;          // K-1 diagonal entries
    double s = 0.0; // rank-one coefficient contributed by class K
    std::size_t k = 0;
};

// Dense symmetric (K-1) x (K-1) covariance lower bound.
struct CrbMatrix {
    std::size_t n = 0;
    std::vector<double> values;  // row-major n*n

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

// Offline FIM: d_i = (alpha_i - 1 + sum_n f_i^{x_n}) / pi_i^2 for i < K,
// s the analogous class-K term.  Requires alpha_i >= 1 (else the matrix is
// not guaranteed positive and the CRB is undefined) and pi interior.
FisherMatrix fim_offline(const Vec& pi, const Vec& alpha, const PosteriorBatch& batch);

// (diag(d) + s 11^T)^{-1} by the Sherman-Morrison identity.  Throws
// numerical_error when any d_i <= 0 or s <= 0.
CrbMatrix crb_offline(const FisherMatrix& fim);

// Online FIM: d_i = (alpha_i - 1 + (1-gamma) delta_i + gamma * mean_i) / pi_i^2
// with delta the current pseudo-label indicator and mean the running
// posterior mean.  Requires tau >= 1.
FisherMatrix fim_online(const OnlineEstimatorState& state, const EstimatorConfig& config);

// Identical contract to crb_offline (same diag-plus-rank-one structure).
CrbMatrix crb_online(const FisherMatrix& fim);

}  // namespace labelshift
