#pragma once

// Dense complex polynomials (coefficients stored lowest degree first) and an
// Aberth-Ehrlich simultaneous root finder.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"

namespace diskdyn {

using Polynomial = std::vector<cplx>;

inline Polynomial poly_multiply(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Polynomial out(a.size() + b.size() - 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline Polynomial poly_scale(Polynomial p, cplx s) {
    for (auto& c : p) {
        c *= s;
    }
    return p;
}

inline Polynomial poly_add(std::span<const cplx> a, std::span<const cplx> b) {
    Polynomial out(std::max(a.size(), b.size()), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Polynomial poly_derivative(std::span<const cplx> p) {
    if (p.size() <= 1) {
        return {cplx{0.0, 0.0}};
    }
    Polynomial out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) {
        out[k - 1] = static_cast<double>(k) * p[k];
    }
    return out;
}

/// Horner evaluation of p and p' at z.
inline std::pair<cplx, cplx> poly_eval_with_derivative(std::span<const cplx> p, cplx z) {
    cplx value{0.0, 0.0};
    cplx deriv{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + p[k];
    }
    return {value, deriv};
}

inline cplx poly_eval(std::span<const cplx> p, cplx z) {
    return poly_eval_with_derivative(p, z).first;
}

namespace detail {

// sum |c_k| |z|^k, the scale of rounding errors in evaluating p(z).
inline double poly_abs_eval(std::span<const cplx> p, double r) {
    double acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * r + std::abs(p[k]);
    }
    return acc;
}

}  // namespace detail

struct RootFinderOptions {
    int max_iterations = 2000;
    /// Relative backward error accepted for every root after the iteration cap.
    double acceptance = 1e-10;
};

/// All roots of p (with repetition) by Aberth-Ehrlich iteration. Leading
/// coefficients that are exactly zero are dropped; trailing exact zeros give
/// exact roots at the origin.
inline std::vector<cplx> polynomial_roots(Polynomial p, const RootFinderOptions& opts = {}) {
    while (!p.empty() && p.back() == cplx{0.0, 0.0}) {
        p.pop_back();
    }
    if (p.empty()) {
        throw DomainError("polynomial_roots: zero polynomial");
    }
    std::vector<cplx> roots;
    std::size_t shift = 0;
    while (shift < p.size() - 1 && p[shift] == cplx{0.0, 0.0}) {
        ++shift;
    }
    roots.assign(shift, cplx{0.0, 0.0});
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));

    const std::size_t n = p.size() - 1;
    if (n == 0) {
        return roots;
    }
    if (n == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }

    const cplx lead = p[n];
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ratio = std::abs(p[k] / lead);
        if (ratio > 0.0) {
            radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(n - k)));
        }
    }
    const cplx center = -p[n - 1] / (static_cast<double>(n) * lead);
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
        z[k] = center + radius * std::polar(1.0, angle);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> done(n, false);
    double worst = 0.0;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        bool all_done = true;
        worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto [value, deriv] = poly_eval_with_derivative(p, z[k]);
            const double scale = detail::poly_abs_eval(p, std::abs(z[k]));
            const double backward = std::abs(value) / (scale > 0.0 ? scale : 1.0);
            worst = std::max(worst, backward);
            if (backward <= 8.0 * eps) {
                done[k] = true;
                continue;
            }
            if (done[k]) {
                continue;
            }
            all_done = false;
            const cplx newton = value / deriv;
            cplx repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    repulsion += 1.0 / (z[k] - z[j]);
                }
            }
            const cplx step = newton / (1.0 - newton * repulsion);
            if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
                z[k] -= step;
                if (std::abs(step) <= 4.0 * eps * std::abs(z[k])) {
                    done[k] = true;
                }
            }
        }
        if (all_done) {
            break;
        }
    }
    if (worst > opts.acceptance) {
        throw NumericalError("polynomial_roots: Aberth iteration did not converge (relative residual " +
                                 std::to_string(worst) + ")",
                             worst);
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace diskdyn
