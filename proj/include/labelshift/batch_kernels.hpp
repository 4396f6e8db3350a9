#pragma once

#include "labelshift/simplex.hpp"

namespace labelshift {

struct PosteriorBatch;

// Column sums of the reweighted posteriors: out_j = sum_i r_ij where
// r_i = reweight_posterior(row_i, pi, eps_train).  This is the O(NK)
// reduction inside every batch E-step / pi update.
//
// The serial kernel is the reference; the parallel kernel splits the rows
// into fixed-size blocks, accumulates each block independently (OpenMP),
// and combines the block partials in block order.  The fixed block
// structure makes the parallel result independent of the thread count.
Vec accumulate_reweighted_serial(const PosteriorBatch& batch, const Vec& pi,
                                 const Vec& eps_train);
Vec accumulate_reweighted_parallel(const PosteriorBatch& batch, const Vec& pi,
                                   const Vec& eps_train);

// Dispatch: parallel when the batch is large enough (fixed threshold) and
// parallel kernels are enabled, serial otherwise.
Vec accumulate_reweighted(const PosteriorBatch& batch, const Vec& pi,
                          const Vec& eps_train);

// Global switch used by the benchmark and complexity measurements.
void set_parallel_kernels(bool enabled);
bool parallel_kernels_enabled();

}  // namespace labelshift
