#pragma once

// Nevanlinna counting function N_f(w) = sum (1 - |a|) over f(a) = w with
// multiplicity, and the pointwise Lyubarskii-Malinnikova expression.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn {

struct CountingSample {
    DiskPoint point;
    double value;
    /// Preimages counted with multiplicity; equals the degree.
    int preimage_count;
};

inline CountingSample nevanlinna(const FiniteBlaschkeProduct& f, const DiskPoint& w) {
    CountingSample out{w, 0.0, 0};
    for (const auto& p : preimages(f, w.value())) {
        out.value += p.multiplicity * (1.0 - p.point.modulus());
        out.preimage_count += p.multiplicity;
    }
    return out;
}

/// N_f(w) (1 - |Theta(w)|^2) / (1 - |w|^2).
inline double lm_functional(const FiniteBlaschkeProduct& f, const FiniteBlaschkeProduct& theta, const DiskPoint& w) {
    const DiskState s = DiskState::at(w.value());
    return nevanlinna(f, w).value * theta.step(s).defect / s.defect;
}

struct ScanRow {
    double r;
    double N;
    double ratio;
    double lm_value;
};

struct ComparabilityScan {
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0.0;
    std::vector<ScanRow> rows;
};

/// N_f(r)/(1 - r^2) along the positive radius, with lm_value against theta.
inline ComparabilityScan inner_comparability_scan(const FiniteBlaschkeProduct& f, std::span<const double> radii,
                                                  const FiniteBlaschkeProduct& theta = FiniteBlaschkeProduct::identity()) {
    ComparabilityScan out;
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw DomainError("inner_comparability_scan: radii must lie in (0, 1)");
        }
        const DiskPoint w(r, 0.0);
        const double N = nevanlinna(f, w).value;
        const double ratio = N / ((1.0 - r) * (1.0 + r));
        out.rows.push_back({r, N, ratio, lm_functional(f, theta, w)});
        out.min_ratio = std::min(out.min_ratio, ratio);
        out.max_ratio = std::max(out.max_ratio, ratio);
    }
    return out;
}

/// r_k = 1 - 2^-k for k = k_min..k_max.
inline std::vector<double> dyadic_radii(int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min || k_max > 52) {
        throw DomainError("dyadic_radii: need 1 <= k_min <= k_max <= 52");
    }
    std::vector<double> out;
    for (int k = k_min; k <= k_max; ++k) out.push_back(1.0 - std::ldexp(1.0, -k));
    return out;
}

/// count radii from r_min to r_max with 1 - r geometrically spaced.
inline std::vector<double> log_spaced_radii(double r_min, double r_max, int count) {
    if (!(r_min > 0.0 && r_min < r_max && r_max < 1.0) || count < 2) {
        throw DomainError("log_spaced_radii: need 0 < r_min < r_max < 1 and count >= 2");
    }
    std::vector<double> out;
    const double q = std::log((1.0 - r_max) / (1.0 - r_min));
    for (int j = 0; j < count; ++j) out.push_back(1.0 - (1.0 - r_min) * std::exp(q * j / (count - 1)));
    out.back() = r_max;
    return out;
}

}  // namespace diskdyn
