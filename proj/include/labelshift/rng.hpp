#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "labelshift/errors.hpp"

namespace labelshift {

// Seeded 64-bit generator (std::mt19937_64 core, whose raw output stream is
// fixed by the standard) with the sampling transforms the library needs.
// The transforms live here instead of std:: distributions so that a seed
// pins the sample sequence independently of the standard library version.
// Instances are single-owner; concurrent trials each get their own Rng.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1, by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw validation_error("Rng::next_below: bound must be >= 1");
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r < limit) return r % bound;
        }
    }

    // Standard normal via the Marsaglia polar method; caches the spare deviate.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    // Gamma(shape, 1).  Marsaglia-Tsang squeeze for shape >= 1; for
    // shape < 1 the boost transform Gamma(a) = Gamma(a+1) * U^{1/a}.
    double next_gamma(double shape) {
        if (!(shape > 0.0)) throw validation_error("Rng::next_gamma: shape must be > 0");
        if (shape < 1.0) {
            const double u = next_unit();
            return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_unit();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (u <= 0.0 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    // Dirichlet(alpha) by normalized Gamma draws.
    std::vector<double> next_dirichlet(const std::vector<double>& alpha) {
        if (alpha.size() < 2)
            throw validation_error("Rng::next_dirichlet: need at least 2 components");
        std::vector<double> g(alpha.size());
        for (int attempt = 0; attempt < 16; ++attempt) {
            double sum = 0.0;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                g[i] = next_gamma(alpha[i]);
                sum += g[i];
            }
            if (sum > 0.0) {
                for (double& x : g) x /= sum;
                return g;
            }
            // all draws underflowed to zero (only possible for tiny shapes)
        }
        throw numerical_error("Rng::next_dirichlet: degenerate draw (all-zero gammas)");
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace labelshift
