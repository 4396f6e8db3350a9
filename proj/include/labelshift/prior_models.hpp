#pragma once

#include <cstdint>
#include <utility>

#include "labelshift/rng.hpp"
#include "labelshift/simplex.hpp"

namespace labelshift {

struct ClassCounts {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

enum class PriorKind { ShuffledLongTail, Dirichlet };

// Test-prior construction recipe.  For ShuffledLongTail, n_total is the
// head-class size fed to longtail_counts (the per-class maximum); for
// Dirichlet it is the total sample budget split as floor(n_total * p).
struct PriorScenario {
    PriorKind kind = PriorKind::ShuffledLongTail;
    double rho = 0.1;        // ShuffledLongTail imbalance ratio, (0, 1]
    Vec alpha_test;          // Dirichlet concentration, all > 0
    std::int64_t n_total = 1000;
    std::size_t k = 10;
    std::uint64_t seed = 0;
};

// counts_i = floor(n_per_class_max * rho^(i/k)) for i in {0, ..., k-1};
// class 0 receives exactly n_per_class_max.
ClassCounts longtail_counts(std::int64_t n_per_class_max, double rho, std::size_t k);

// Long-tail counts permuted by a uniform Fisher-Yates shuffle; the prior is
// the normalized counts.
std::pair<ClassCounts, Vec> shuffled_longtail_prior(const PriorScenario& sc, Rng& rng);

// p ~ Dir(alpha_test); counts_i = floor(n_total * p_i).  The returned prior
// is the exact sampled p, not the floored empirical ratio.
std::pair<ClassCounts, Vec> dirichlet_prior(const PriorScenario& sc, Rng& rng);

Vec counts_to_prior(const ClassCounts& c, double eps_floor = kDefaultEpsFloor);

// Dispatch on sc.kind.
std::pair<ClassCounts, Vec> sample_scenario_prior(const PriorScenario& sc, Rng& rng);

}  // namespace labelshift
