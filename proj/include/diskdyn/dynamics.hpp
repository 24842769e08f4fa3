#pragma once

// Denjoy-Wolff point, the elliptic/hyperbolic/parabolic trichotomy, the
// hyperbolic step test, orbit merging and Julia's lemma containment.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn {

enum class MapKind { elliptic_interior, hyperbolic, parabolic };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::elliptic_interior: return "elliptic-interior";
        case MapKind::hyperbolic: return "hyperbolic";
        case MapKind::parabolic: return "parabolic";
    }
    return "?";
}

struct MapClass {
    MapKind kind;
    cplx dw_point;
    /// Angular derivative at a boundary Denjoy-Wolff point; empty for an interior one.
    std::optional<double> angular_derivative;
    /// f'(dw_point) for an interior fixed point.
    cplx interior_derivative{0.0, 0.0};
    double fixed_point_residual = 0.0;
    int iterations = 0;
};

inline constexpr double kParabolicBand = 1e-4;
/// Fixed points closer than this to the circle are treated as boundary points.
inline constexpr double kInteriorMargin = 1e-6;

namespace detail {

/// rho(z, w) from the defect channels: |1 - conj(z) w|^2 = dz dw + |z - w|^2.
inline double state_distance(const DiskState& a, const DiskState& b) {
    const double gap = std::norm(a.z - b.z);
    if (gap == 0.0) return 0.0;
    return std::sqrt(gap / (a.defect * b.defect + gap));
}

/// (p z + q)/(r z + s) as {p, q, r, s}, when the map is a single Mobius stage chain.
template <class M>
std::optional<std::array<cplx, 4>> mobius_coefficients(const M& f) {
    auto of_stage = [](const FiniteBlaschkeProduct& g) -> std::array<cplx, 4> {
        const auto [num, den] = g.rational_form();
        return {num.size() > 1 ? num[1] : cplx{0.0, 0.0}, num[0], den.size() > 1 ? den[1] : cplx{0.0, 0.0}, den[0]};
    };
    if constexpr (std::is_same_v<M, FiniteBlaschkeProduct>) {
        if (f.degree() != 1) return std::nullopt;
        return of_stage(f);
    } else if constexpr (std::is_same_v<M, CompositeMap>) {
        if (f.degree() != 1) return std::nullopt;
        std::array<cplx, 4> acc{1.0, 0.0, 0.0, 1.0};
        for (const auto& stage : f.stages()) {
            const auto m = of_stage(stage);
            acc = {m[0] * acc[0] + m[1] * acc[2], m[0] * acc[1] + m[1] * acc[3],
                   m[2] * acc[0] + m[3] * acc[2], m[2] * acc[1] + m[3] * acc[3]};
        }
        return acc;
    } else {
        return std::nullopt;
    }
}

template <DiskSelfMap M>
void reject_identity(const M& f) {
    for (cplx z : {cplx{0.0, 0.0}, cplx{0.5, 0.0}, cplx{0.0, 0.3}}) {
        if (std::abs(f(z) - z) > 1e-15) return;
    }
    throw DomainError("the identity map has no Denjoy-Wolff point");
}

template <DiskSelfMap M>
std::optional<MapClass> try_interior(const M& f, cplx z, double tol) {
    for (int k = 0; k < 60; ++k) {
        const cplx g = f(z) - z;
        if (std::abs(g) < 1e-3 * tol) break;
        const cplx slope = f.derivative(z) - 1.0;
        if (slope == cplx{0.0, 0.0}) return std::nullopt;
        cplx step = g / slope;
        double damping = 1.0;
        cplx next = z - step;
        while (damping > 1e-6 && (!(std::abs(next) < 1.0) || std::abs(f(next) - next) >= std::abs(g))) {
            damping *= 0.5;
            next = z - damping * step;
        }
        if (damping <= 1e-6) break;
        z = next;
    }
    // Newton from near the circle can land on a boundary fixed point in rounding.
    if (!(std::abs(z) < 1.0 - kInteriorMargin)) return std::nullopt;
    const DiskState point = DiskState::at(z);
    const double residual = std::abs(f(z) - z);
    const double hyperbolic_residual = state_distance(point, f.step(point));
    const cplx slope = f.derivative(z);
    if (residual < tol && hyperbolic_residual < tol && std::abs(slope) < 1.0 - 1e-6) {
        MapClass c{MapKind::elliptic_interior, z, std::nullopt, slope, residual, 0};
        return c;
    }
    return std::nullopt;
}

template <DiskSelfMap M>
double boundary_angle_defect(const M& f, double theta) {
    const cplx omega = std::polar(1.0, theta);
    return std::arg(f(omega) * std::conj(omega));
}

template <DiskSelfMap M>
std::optional<MapClass> try_boundary(const M& f, const std::vector<cplx>& tail, double tol) {
    cplx mean{0.0, 0.0};
    for (const auto& z : tail) mean += z / std::abs(z);
    if (std::abs(mean) == 0.0) return std::nullopt;
    double theta = std::arg(mean);
    // Newton on F(theta) = arg(f(e^{i theta}) e^{-i theta}), F' = |f'| - 1; near a
    // multiple zero of F switch to Newton on F'.
    for (int k = 0; k < 80; ++k) {
        const double value = boundary_angle_defect(f, theta);
        const double slope = std::abs(f.derivative(std::polar(1.0, theta))) - 1.0;
        double delta;
        if (std::abs(slope) > 1e-3) {
            delta = value / slope;
        } else {
            const double h = 1e-6;
            const double curvature = (std::abs(f.derivative(std::polar(1.0, theta + h))) -
                                      std::abs(f.derivative(std::polar(1.0, theta - h)))) / (2.0 * h);
            if (value == 0.0 && slope == 0.0) break;
            if (curvature == 0.0) break;
            delta = slope / curvature;
        }
        if (!std::isfinite(delta)) return std::nullopt;
        delta = std::clamp(delta, -0.1, 0.1);
        theta -= delta;
        if (std::abs(delta) < 1e-15) break;
    }
    const cplx omega = std::polar(1.0, theta);
    const double residual = std::abs(f(omega) - omega);
    if (residual > std::max(tol, 1e-9)) return std::nullopt;
    const auto report = angular_derivative(f, omega);
    if (!report.finite || report.angular_derivative > 1.0 + std::max(tol, 1e-6)) return std::nullopt;
    const double a = report.angular_derivative;
    const MapKind kind = a < 1.0 - kParabolicBand ? MapKind::hyperbolic : MapKind::parabolic;
    MapClass c{kind, omega, a, cplx{0.0, 0.0}, residual, 0};
    return c;
}

}  // namespace detail

/// Locates the Denjoy-Wolff point by iterating from 0.
template <DiskSelfMap M>
MapClass denjoy_wolff(const M& f, double tol = 1e-10, int n_max = 100000) {
    detail::reject_identity(f);
    if (const auto m = detail::mobius_coefficients(f)) {
        const auto [p, q, r, s] = *m;
        std::vector<cplx> fixed;
        if (std::abs(r) > 0.0) {
            const cplx b = s - p;
            const cplx disc = std::sqrt(b * b + 4.0 * r * q);
            fixed = {(-b + disc) / (2.0 * r), (-b - disc) / (2.0 * r)};
        } else if (std::abs(s - p) > 0.0) {
            fixed = {q / (s - p)};
        }
        for (const auto& z : fixed) {
            if (std::abs(z) < 1.0 - kInteriorMargin) {
                return {MapKind::elliptic_interior, z, std::nullopt, f.derivative(z), std::abs(f(z) - z), 0};
            }
        }
    }

    DiskState state = DiskState::at(0.0);
    std::vector<cplx> tail;
    int next_check = 16;
    bool tried_at_rest = false;
    double last_move = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const DiskState next = f.step(state);
        last_move = std::abs(next.z - state.z);
        state = next;
        tail.push_back(state.z);
        if (tail.size() > 16) tail.erase(tail.begin());
        const bool at_rest = last_move < tol;
        if ((at_rest && !tried_at_rest) || n == next_check || n == n_max) {
            tried_at_rest = tried_at_rest || at_rest;
            if (n == next_check) next_check *= 2;
            if (auto c = detail::try_interior(f, state.z, tol)) {
                c->iterations = n;
                return *c;
            }
            if (std::abs(state.z) > 0.9) {
                if (auto c = detail::try_boundary(f, tail, tol)) {
                    c->iterations = n;
                    return *c;
                }
            }
        }
    }
    throw NumericalError("denjoy_wolff: no fixed point confirmed after " + std::to_string(n_max) + " iterations",
                         last_move);
}

template <DiskSelfMap M>
MapClass classify(const M& f) {
    return denjoy_wolff(f);
}

enum class StepVerdict { positive, zero, inconclusive };

inline const char* to_string(StepVerdict v) {
    switch (v) {
        case StepVerdict::positive: return "positive";
        case StepVerdict::zero: return "zero";
        case StepVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct StepThresholds {
    double zero_level = 1e-4;
    double zero_ratio = 0.75;
    double positive_level = 1e-3;
    double positive_ratio = 0.99;
};

struct StepReport {
    StepVerdict verdict;
    /// s_n = rho(f^n(z0), f^{n+1}(z0)), n = 0..N.
    std::vector<double> sequence;
    double limit_estimate;
    DiskPoint base_point;
    /// First n computed in half-plane coordinates, or -1.
    int halfplane_from = -1;
    /// True when the orbit left double range before n_max.
    bool stopped_early = false;
    /// |arg w_N| / (pi/2) in the Denjoy-Wolff chart: near 1 means tangential approach.
    double tangentiality = 0.0;
};

inline StepVerdict step_verdict(const std::vector<double>& s, const StepThresholds& t = {}) {
    if (s.size() < 3) return StepVerdict::inconclusive;
    const std::size_t last = s.size() - 1;
    const double tail = s[last];
    const double half = s[last / 2];
    const double ratio = half > 0.0 ? tail / half : 1.0;
    if (tail < t.zero_level && ratio < t.zero_ratio) return StepVerdict::zero;
    if (tail > t.positive_level && ratio > t.positive_ratio) return StepVerdict::positive;
    return StepVerdict::inconclusive;
}

namespace detail {

inline constexpr double kHalfPlaneSwitch = 0.999;
inline constexpr double kHalfPlaneLimit = 1e250;

/// Runs one or two orbits, in the disk while they stay inside |z| <= 0.999 and
/// in the half-plane chart at the Denjoy-Wolff point afterwards.
template <DiskSelfMap M>
class TwoChartOrbit {
public:
    TwoChartOrbit(const M& f, cplx contact, cplx z0) : f_(&f), contact_(contact), disk_(DiskState::at(z0)) {}

    bool in_halfplane() const { return in_half_; }
    bool overflowed() const { return in_half_ && std::abs(half_.w) > kHalfPlaneLimit; }
    const DiskState& disk() const { return disk_; }
    const HalfPlaneState& half() const { return half_; }

    void switch_chart() {
        if (in_half_) return;
        half_ = to_halfplane(disk_.z, contact_);
        in_half_ = true;
    }
    bool wants_switch() const { return !in_half_ && std::abs(disk_.z) > kHalfPlaneSwitch; }

    void advance() {
        if (in_half_) {
            half_ = f_->transport(half_);
        } else {
            disk_ = f_->step(disk_);
        }
    }

private:
    const M* f_;
    cplx contact_;
    DiskState disk_;
    HalfPlaneState half_;
    bool in_half_ = false;
};

template <DiskSelfMap M>
double orbit_distance(const TwoChartOrbit<M>& a, const TwoChartOrbit<M>& b) {
    if (a.in_halfplane()) return halfplane_distance(a.half(), b.half());
    return state_distance(a.disk(), b.disk());
}

}  // namespace detail

/// Hyperbolic step test along the orbit of z0, given the Denjoy-Wolff point.
template <DiskSelfMap M>
StepReport hyperbolic_step(const M& f, const DiskPoint& z0, const MapClass& cls, int n_max = 10000,
                           const StepThresholds& thresholds = {}) {
    if (cls.kind == MapKind::elliptic_interior) {
        throw DomainError("hyperbolic_step: map has an interior fixed point");
    }
    if (n_max < 2) {
        throw DomainError("hyperbolic_step: n_max must be at least 2");
    }
    StepReport report{StepVerdict::inconclusive, {}, 0.0, z0};
    detail::TwoChartOrbit<M> current(f, cls.dw_point, z0.value());
    for (int n = 0; n <= n_max; ++n) {
        if (current.wants_switch()) {
            current.switch_chart();
            report.halfplane_from = n;
        }
        detail::TwoChartOrbit<M> next = current;
        next.advance();
        report.sequence.push_back(detail::orbit_distance(current, next));
        current = next;
        if (current.overflowed()) {
            report.stopped_early = n < n_max;
            break;
        }
    }
    report.verdict = step_verdict(report.sequence, thresholds);
    report.limit_estimate = report.sequence.back();
    if (current.in_halfplane()) {
        report.tangentiality = static_cast<double>(std::abs(std::arg(current.half().w))) / (std::numbers::pi / 2.0);
    }
    return report;
}

template <DiskSelfMap M>
StepReport hyperbolic_step(const M& f, const DiskPoint& z0, int n_max = 10000) {
    return hyperbolic_step(f, z0, classify(f), n_max);
}

/// rho(f^n(z0), f^n(w0)) for n = 0..n_max.
template <DiskSelfMap M>
std::vector<double> orbit_merging(const M& f, const DiskPoint& z0, const DiskPoint& w0, const MapClass& cls,
                                  int n_max) {
    if (n_max < 0) {
        throw DomainError("orbit_merging: n_max must be nonnegative");
    }
    detail::TwoChartOrbit<M> a(f, cls.dw_point, z0.value());
    detail::TwoChartOrbit<M> b(f, cls.dw_point, w0.value());
    const bool boundary = cls.kind != MapKind::elliptic_interior;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (boundary && (a.wants_switch() || b.wants_switch())) {
            a.switch_chart();
            b.switch_chart();
        }
        out.push_back(detail::orbit_distance(a, b));
        if (n == n_max || a.overflowed() || b.overflowed()) break;
        a.advance();
        b.advance();
    }
    return out;
}

template <DiskSelfMap M>
std::vector<double> orbit_merging(const M& f, const DiskPoint& z0, const DiskPoint& w0, int n_max) {
    return orbit_merging(f, z0, w0, classify(f), n_max);
}

struct JuliaContainmentReport {
    bool contained;
    cplx omega;
    cplx eta;
    double angular_derivative;
    double level;
    /// max over samples of julia_quotient(f(z), eta) / (a M).
    double max_ratio;
    int samples;
    std::optional<cplx> witness;
};

/// Samples H(omega, M) and checks f(H(omega, M)) inside H(eta, a M), eta = f(omega).
template <DiskSelfMap M>
JuliaContainmentReport julia_containment_check(const M& f, cplx omega, double level, int samples,
                                               std::uint64_t seed) {
    const Horodisk disk(omega, level);
    if (samples < 1) {
        throw DomainError("julia_containment_check: need at least one sample");
    }
    const auto boundary = angular_derivative(f, disk.contact());
    if (!boundary.finite) {
        throw NumericalError("julia_containment_check: angular derivative is not finite", boundary.extrapolation_residual);
    }
    const double a = boundary.angular_derivative;
    const cplx eta = boundary.boundary_value / std::abs(boundary.boundary_value);
    JuliaContainmentReport report{true, disk.contact(), eta, a, level, 0.0, samples, std::nullopt};

    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < samples; ++k) {
        const double r = disk.radius() * std::sqrt(unit(engine));
        const cplx z = disk.center() + std::polar(r, 2.0 * std::numbers::pi * unit(engine));
        if (!(julia_quotient(z, disk.contact()) < level)) continue;
        const DiskState image = f.step(DiskState::at(z));
        const double quotient = std::norm(image.z - eta) / image.defect;
        const double ratio = quotient / (a * level);
        if (ratio > report.max_ratio) report.max_ratio = ratio;
        if (ratio > 1.0 + 1e-9 && report.contained) {
            report.contained = false;
            report.witness = z;
        }
    }
    return report;
}

}  // namespace diskdyn
