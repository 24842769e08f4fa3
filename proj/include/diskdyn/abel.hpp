#pragma once

// Abel functions in right half-plane coordinates: the normalized iterates
// g_n(z) = (F^n(z) - i y_n) / x_n and h_n(z) = (F^n(z) - z_n) / (z_{n+1} - z_n)
// along the base orbit z_n = x_n + i y_n of z_0 = 1, Abel residuals, and a
// Mobius fit of the semiconjugacy g o F = psi o g.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn {

/// A self-map F of the right half-plane with a cached base orbit.
class HalfPlaneMap {
public:
    using Function = std::function<wide(wide)>;

    explicit HalfPlaneMap(Function F, wide base = 1.0L)
        : F_(std::move(F)), cache_(std::make_shared<Cache>()) {
        if (!(base.real() > 0.0L)) {
            throw DomainError("HalfPlaneMap: base point must lie in the right half-plane");
        }
        cache_->orbit.push_back(base);
    }

    /// The disk map f seen in the chart w = (contact + z)/(contact - z).
    template <DiskSelfMap M>
    static HalfPlaneMap from_disk(const M& f, cplx contact = 1.0, wide base = 1.0L) {
        if (std::abs(std::abs(contact) - 1.0) > Horodisk::kUnimodularTolerance) {
            throw DomainError("HalfPlaneMap: contact must be unimodular");
        }
        contact /= std::abs(contact);
        return HalfPlaneMap(
            [f, contact](wide w) {
                if (!(w.real() > 0.0L)) {
                    throw DomainError("HalfPlaneMap: point outside the right half-plane");
                }
                return change_chart(f.transport(HalfPlaneState{w, contact}), contact);
            },
            base);
    }

    wide operator()(wide w) const { return F_(w); }

    wide iterate(wide w, int n) const {
        if (n < 0) {
            throw DomainError("HalfPlaneMap: n must be nonnegative");
        }
        for (int k = 0; k < n; ++k) w = F_(w);
        return w;
    }

    /// z_n, extending the cache as needed.
    wide orbit(int n) const {
        if (n < 0) {
            throw DomainError("HalfPlaneMap: n must be nonnegative");
        }
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto& z = cache_->orbit;
        while (static_cast<int>(z.size()) <= n) z.push_back(F_(z.back()));
        return z[static_cast<std::size_t>(n)];
    }

    wide base() const { return orbit(0); }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<wide> orbit;
    };

    Function F_;
    std::shared_ptr<Cache> cache_;
};

/// g_n(z) = (F^n(z) - i y_n) / x_n.
inline cplx pommerenke_g(const HalfPlaneMap& map, cplx z, int n) {
    if (!(z.real() > 0.0)) {
        throw DomainError("pommerenke_g: z must lie in the right half-plane");
    }
    const wide zn = map.orbit(n);
    const wide value = map.iterate(wide(z), n);
    return cplx((value - wide(0.0L, zn.imag())) / zn.real());
}

/// h_n(z) = (F^n(z) - z_n) / (z_{n+1} - z_n).
inline cplx baker_pommerenke_h(const HalfPlaneMap& map, cplx z, int n) {
    if (!(z.real() > 0.0)) {
        throw DomainError("baker_pommerenke_h: z must lie in the right half-plane");
    }
    const wide zn = map.orbit(n);
    const wide gap = map.orbit(n + 1) - zn;
    if (std::abs(gap) < 1e-300L) {
        throw NumericalError("baker_pommerenke_h: base orbit is numerically stationary at n = " + std::to_string(n),
                             static_cast<double>(std::abs(gap)));
    }
    return cplx((map.iterate(wide(z), n) - zn) / gap);
}

enum class AbelKind { pommerenke_g, baker_pommerenke_h };

struct AbelApproximation {
    AbelKind kind;
    int n;
    HalfPlaneMap map;
    /// max over the probes of |value_n - value_{n-1}|.
    double convergence = 0.0;

    cplx operator()(cplx z) const { return evaluate(z, n); }

    cplx evaluate(cplx z, int index) const {
        return kind == AbelKind::pommerenke_g ? pommerenke_g(map, z, index) : baker_pommerenke_h(map, z, index);
    }
};

inline AbelApproximation make_abel_approximation(const HalfPlaneMap& map, AbelKind kind, int n,
                                                 std::span<const cplx> probes) {
    if (n < 1) {
        throw DomainError("make_abel_approximation: n must be at least 1");
    }
    AbelApproximation approx{kind, n, map, 0.0};
    for (const auto& p : probes) {
        approx.convergence = std::max(approx.convergence, std::abs(approx.evaluate(p, n) - approx.evaluate(p, n - 1)));
    }
    return approx;
}

/// Ten probes on the circle |z - 1| = 1/2.
inline std::vector<cplx> default_abel_probes() {
    std::vector<cplx> probes;
    for (int k = 0; k < 10; ++k) probes.push_back(1.0 + std::polar(0.5, 2.0 * std::numbers::pi * k / 10.0));
    return probes;
}

/// max over probes of |h(F(z)) - h(z) - 1|.
template <class H>
double abel_residual(H&& h, const HalfPlaneMap& map, std::span<const cplx> probes) {
    double worst = 0.0;
    for (const auto& z : probes) {
        const cplx image(map(wide(z)));
        worst = std::max(worst, std::abs(h(image) - h(z) - 1.0));
    }
    return worst;
}

struct AbelResidualRow {
    int n;
    int probe_id;
    double residual;
    /// |h_n(p) - h_prev(p)| against the previous n in the table; 0 for the first.
    double diff_from_prev;
};

inline std::vector<AbelResidualRow> abel_residual_table(const HalfPlaneMap& map, std::span<const int> ns,
                                                        std::span<const cplx> probes) {
    std::vector<AbelResidualRow> rows;
    std::vector<cplx> previous;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        std::vector<cplx> current;
        for (std::size_t k = 0; k < probes.size(); ++k) {
            const cplx z = probes[k];
            const cplx hz = baker_pommerenke_h(map, z, ns[i]);
            const cplx hfz = baker_pommerenke_h(map, cplx(map(wide(z))), ns[i]);
            current.push_back(hz);
            const double diff = previous.empty() ? 0.0 : std::abs(hz - previous[k]);
            rows.push_back({ns[i], static_cast<int>(k), std::abs(hfz - hz - 1.0), diff});
        }
        previous = std::move(current);
    }
    return rows;
}

/// psi(w) = (a w + b) / (c w + d).
struct MobiusFit {
    cplx a, b, c, d;
    double fit_residual;
    /// Smallest and second-smallest singular values over the largest.
    double null_gap;
    double conditioning;
    bool fixes_infinity;
    bool parabolic;

    cplx operator()(cplx w) const { return (a * w + b) / (c * w + d); }
};

/// Least-squares Mobius map through the pairs (g_n(z), g_n(F(z))).
inline MobiusFit extract_semiconjugacy(const HalfPlaneMap& map, int n, std::span<const cplx> probes) {
    if (probes.size() < 8) {
        throw DomainError("extract_semiconjugacy: need at least 8 probes");
    }
    std::vector<cplx> u, v;
    double spread = 0.0;
    for (const auto& z : probes) {
        u.push_back(pommerenke_g(map, z, n));
        v.push_back(pommerenke_g(map, cplx(map(wide(z))), n));
        spread = std::max({spread, std::abs(u.back() - 1.0), std::abs(v.back() - 1.0)});
    }
    if (spread < 0.1) {
        throw DomainError("extract_semiconjugacy: g_n is within 0.1 of the constant 1 on every probe "
                          "(zero hyperbolic step)");
    }
    // a u + b - c u v - d v = 0 for every pair; scale rows to unit size.
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(u.size()), 4);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const Eigen::Index r = static_cast<Eigen::Index>(k);
        A(r, 0) = u[k];
        A(r, 1) = 1.0;
        A(r, 2) = -u[k] * v[k];
        A(r, 3) = -v[k];
        A.row(r) /= A.row(r).norm();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double largest = s(0);
    const double second_smallest = s(2) / largest;
    if (!(second_smallest > 1e-10)) {
        throw NumericalError("extract_semiconjugacy: degenerate probe configuration", second_smallest);
    }
    const Eigen::VectorXcd x = svd.matrixV().col(3);
    MobiusFit fit{x(0), x(1), x(2), x(3), 0.0, s(3) / largest, second_smallest, false, false};
    // Normalize so that d = 1 when possible.
    const cplx scale = std::abs(fit.d) > 1e-300 ? fit.d : fit.a;
    fit.a /= scale;
    fit.b /= scale;
    fit.c /= scale;
    fit.d /= scale;
    for (std::size_t k = 0; k < u.size(); ++k) fit.fit_residual = std::max(fit.fit_residual, std::abs(fit(u[k]) - v[k]));

    const double size = std::abs(fit.a) + std::abs(fit.d);
    const cplx disc = (fit.d - fit.a) * (fit.d - fit.a) + 4.0 * fit.b * fit.c;
    fit.fixes_infinity = std::abs(fit.c) / size < 1e-6;
    fit.parabolic = std::abs(disc) / (size * size) < 1e-6;
    return fit;
}

}  // namespace diskdyn
