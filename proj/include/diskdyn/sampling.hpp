#pragma once

// Seeded generators for randomized checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "diskdyn/selfmap.hpp"

namespace diskdyn::sampling {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// Area-uniform point in the disk of radius max_radius.
    cplx disk_point(double max_radius = 0.95) {
        const double r = max_radius * std::sqrt(uniform());
        return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
    }

    cplx unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

    FiniteBlaschkeProduct blaschke(int max_degree = 4, double max_radius = 0.9) {
        const int degree = integer(1, max_degree);
        std::vector<Zero> zeros;
        for (int k = 0; k < degree; ++k) zeros.push_back({disk_point(max_radius), 1});
        return {unimodular(), zeros};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace diskdyn::sampling
