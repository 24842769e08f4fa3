#pragma once

// Finite Blaschke products as self-maps of the disk: evaluation (with an
// accurate 1 - |f|^2 channel), derivatives, symbolic composition, iteration,
// preimages, critical points, boundary transport and angular derivatives.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/polynomial.hpp"

namespace diskdyn {

/// A point together with 1 - |z|^2. Near the unit circle the second channel
/// keeps full relative precision where recomputing it from z would not.
struct DiskState {
    cplx z;
    double defect;

    static DiskState at(cplx z) {
        const double r = std::abs(z);
        return {z, (1.0 - r) * (1.0 + r)};
    }
};

/// A point of the right half-plane in the chart w = (contact + z)/(contact - z),
/// i.e. the Cayley transform of z/contact. contact is unimodular and is sent
/// to infinity.
struct HalfPlaneState {
    wide w{};
    cplx contact{1.0, 0.0};
};

inline HalfPlaneState to_halfplane(cplx z, cplx contact) {
    const wide zz(z);
    const wide c(contact);
    return {(c + zz) / (c - zz), contact};
}

inline DiskState from_halfplane(const HalfPlaneState& s) {
    const wide z = wide(s.contact) * (s.w - 1.0L) / (s.w + 1.0L);
    return {cplx(z), static_cast<double>(4.0L * s.w.real() / std::norm(s.w + 1.0L))};
}

/// Re-expresses a half-plane point in the chart of another contact point.
/// Exact formula in terms of 1 - r, r = from/to, so large |w| stays accurate
/// when the two contacts agree to rounding.
inline wide change_chart(const HalfPlaneState& s, cplx target_contact) {
    if (s.contact == target_contact) {
        return s.w;
    }
    const wide to(target_contact);
    const wide from(s.contact);
    const wide r = from / to;
    const wide one_minus_r = (to - from) / to;
    const wide w1 = s.w + 1.0L;
    return ((1.0L + r) * w1 - 2.0L * r) / (one_minus_r * w1 + 2.0L * r);
}

/// Pseudo-hyperbolic distance of two half-plane states (charts reconciled).
inline double halfplane_distance(const HalfPlaneState& a, const HalfPlaneState& b) {
    return halfplane_pseudo_hyperbolic(a.w, change_chart(b, a.contact));
}

struct Zero {
    cplx point;
    int multiplicity = 1;
};

/// gamma * prod m_a(z)^mult over a finite zero multiset, |gamma| = 1.
class FiniteBlaschkeProduct {
public:
    static constexpr double kUnimodularTolerance = 1e-12;

    FiniteBlaschkeProduct(cplx gamma, std::vector<Zero> zeros) : gamma_(gamma), zeros_(std::move(zeros)) {
        if (std::abs(std::abs(gamma_) - 1.0) > kUnimodularTolerance) {
            throw DomainError("Blaschke product: leading constant must be unimodular");
        }
        if (zeros_.empty()) {
            throw DomainError("Blaschke product: at least one zero is required");
        }
        for (const auto& zero : zeros_) {
            if (zero.multiplicity < 1) {
                throw DomainError("Blaschke product: multiplicities must be positive");
            }
            if (!(std::abs(zero.point) < 1.0 - DiskPoint::kBoundaryMargin)) {
                throw DomainError("Blaschke product: zeros must lie strictly inside the disk");
            }
            degree_ += zero.multiplicity;
        }
    }

    static FiniteBlaschkeProduct identity() { return {cplx{1.0, 0.0}, {{cplx{0.0, 0.0}, 1}}}; }

    /// Builds C * prod ((z - a)/(1 - conj(a) z))^mult, converting C to the
    /// m_a-factor convention.
    static FiniteBlaschkeProduct from_rational(cplx leading, std::vector<Zero> zeros) {
        cplx gamma = leading;
        for (const auto& zero : zeros) {
            const double r = std::abs(zero.point);
            if (r > 0.0) {
                const cplx unit = -std::conj(zero.point) / r;
                for (int k = 0; k < zero.multiplicity; ++k) {
                    gamma /= unit;
                }
            }
        }
        return {gamma, std::move(zeros)};
    }

    cplx gamma() const noexcept { return gamma_; }
    const std::vector<Zero>& zeros() const noexcept { return zeros_; }
    int degree() const noexcept { return degree_; }

    cplx operator()(cplx z) const {
        cplx value = gamma_;
        for (const auto& zero : zeros_) {
            const cplx factor = mobius_factor(zero.point, z);
            for (int k = 0; k < zero.multiplicity; ++k) {
                value *= factor;
            }
        }
        return value;
    }

    DiskState step(const DiskState& s) const {
        cplx value = gamma_;
        double log_modulus_sq = 0.0;
        for (const auto& zero : zeros_) {
            const cplx factor = mobius_factor(zero.point, s.z);
            const double factor_defect = std::min(1.0, mobius_defect(zero.point, s.z, s.defect));
            const double log_term = std::log1p(-factor_defect);
            for (int k = 0; k < zero.multiplicity; ++k) {
                value *= factor;
            }
            log_modulus_sq += zero.multiplicity * log_term;
        }
        return {value, -std::expm1(log_modulus_sq)};
    }

    cplx derivative(cplx z) const {
        // f'/f = sum mult (1 - |a|^2) / ((z - a)(1 - conj(a) z)); an exact hit
        // on a zero is handled by leaving that factor out.
        for (std::size_t k = 0; k < zeros_.size(); ++k) {
            if (zeros_[k].point == z) {
                if (zeros_[k].multiplicity > 1) {
                    return {0.0, 0.0};
                }
                const cplx a = zeros_[k].point;
                const double r = std::abs(a);
                const cplx factor_slope = r == 0.0 ? cplx{1.0, 0.0} : -(std::conj(a) / r) / (1.0 - r * r);
                cplx rest = gamma_;
                for (std::size_t j = 0; j < zeros_.size(); ++j) {
                    if (j == k) continue;
                    const cplx factor = mobius_factor(zeros_[j].point, z);
                    for (int m = 0; m < zeros_[j].multiplicity; ++m) {
                        rest *= factor;
                    }
                }
                return rest * factor_slope;
            }
        }
        cplx log_derivative{0.0, 0.0};
        for (const auto& zero : zeros_) {
            const cplx a = zero.point;
            log_derivative += static_cast<double>(zero.multiplicity) * (1.0 - std::norm(a)) /
                              ((z - a) * (1.0 - std::conj(a) * z));
        }
        return (*this)(z) * log_derivative;
    }

    /// Maps a half-plane state through f. Uses
    /// f(z)/f(contact) = prod ((w - c)/(w + conj c))^mult with
    /// c = (contact + a)/(contact - a), so points far out toward the contact
    /// keep relative precision.
    HalfPlaneState transport(const HalfPlaneState& s) const {
        const wide eta(s.contact);
        wide log_ratio{0.0L, 0.0L};
        for (const auto& zero : zeros_) {
            const wide a(zero.point);
            const wide c = (eta + a) / (eta - a);
            const wide delta = -2.0L * c.real() / (s.w + std::conj(c));
            log_ratio += static_cast<long double>(zero.multiplicity) * detail::log1p(delta);
        }
        const cplx image_contact = (*this)(s.contact);
        return {-1.0L - 2.0L / detail::expm1(log_ratio), image_contact / std::abs(image_contact)};
    }

    /// Rational form f = numerator / denominator with
    /// numerator = C prod (z - a)^mult and denominator = prod (1 - conj(a) z)^mult.
    std::pair<Polynomial, Polynomial> rational_form() const {
        Polynomial numerator{gamma_};
        Polynomial denominator{cplx{1.0, 0.0}};
        for (const auto& zero : zeros_) {
            const cplx a = zero.point;
            const double r = std::abs(a);
            const cplx unit = r > 0.0 ? -std::conj(a) / r : cplx{1.0, 0.0};
            const Polynomial top{-a, cplx{1.0, 0.0}};
            const Polynomial bottom{cplx{1.0, 0.0}, -std::conj(a)};
            for (int k = 0; k < zero.multiplicity; ++k) {
                numerator = poly_scale(poly_multiply(numerator, top), unit);
                denominator = poly_multiply(denominator, bottom);
            }
        }
        return {numerator, denominator};
    }

private:
    cplx gamma_;
    std::vector<Zero> zeros_;
    int degree_ = 0;
};

/// Symbolic composition: stages are applied first to last. Never expanded
/// into a single zero list.
class CompositeMap {
public:
    explicit CompositeMap(std::vector<FiniteBlaschkeProduct> stages) : stages_(std::move(stages)) {
        if (stages_.empty()) {
            throw DomainError("composite map needs at least one stage");
        }
    }
    CompositeMap(const FiniteBlaschkeProduct& single) : stages_{single} {}  // NOLINT(implicit)

    const std::vector<FiniteBlaschkeProduct>& stages() const noexcept { return stages_; }

    int degree() const {
        int d = 1;
        for (const auto& s : stages_) d *= s.degree();
        return d;
    }

    cplx operator()(cplx z) const {
        for (const auto& s : stages_) z = s(z);
        return z;
    }

    DiskState step(DiskState st) const {
        for (const auto& s : stages_) st = s.step(st);
        return st;
    }

    cplx derivative(cplx z) const {
        cplx d{1.0, 0.0};
        for (const auto& s : stages_) {
            d *= s.derivative(z);
            z = s(z);
        }
        return d;
    }

    HalfPlaneState transport(HalfPlaneState st) const {
        for (const auto& s : stages_) st = s.transport(st);
        return st;
    }

private:
    std::vector<FiniteBlaschkeProduct> stages_;
};

template <class M>
concept DiskSelfMap = requires(const M& f, cplx z, DiskState s, HalfPlaneState h) {
    { f(z) } -> std::convertible_to<cplx>;
    { f.derivative(z) } -> std::convertible_to<cplx>;
    { f.step(s) } -> std::convertible_to<DiskState>;
    { f.transport(h) } -> std::convertible_to<HalfPlaneState>;
    { f.degree() } -> std::convertible_to<int>;
};

inline CompositeMap as_composite(const FiniteBlaschkeProduct& f) { return CompositeMap(f); }
inline const CompositeMap& as_composite(const CompositeMap& f) { return f; }

/// compose(f, g) = f o g.
template <class F, class G>
CompositeMap compose(const F& f, const G& g) {
    std::vector<FiniteBlaschkeProduct> stages = as_composite(g).stages();
    const std::vector<FiniteBlaschkeProduct> outer = as_composite(f).stages();
    stages.insert(stages.end(), outer.begin(), outer.end());
    return CompositeMap(std::move(stages));
}

template <DiskSelfMap M>
cplx evaluate(const M& f, cplx z) {
    return f(z);
}

template <DiskSelfMap M>
cplx derivative(const M& f, cplx z) {
    return f.derivative(z);
}

/// n-th iterate f^[n](z); n = 0 returns z.
template <DiskSelfMap M>
cplx iterate(const M& f, int n, cplx z) {
    if (n < 0) {
        throw DomainError("iterate: n must be nonnegative");
    }
    for (int k = 0; k < n; ++k) z = f(z);
    return z;
}

template <DiskSelfMap M>
DiskState iterate(const M& f, int n, DiskState s) {
    if (n < 0) {
        throw DomainError("iterate: n must be nonnegative");
    }
    for (int k = 0; k < n; ++k) s = f.step(s);
    return s;
}

struct Preimage {
    DiskPoint point;
    int multiplicity;
};

inline int total_multiplicity(const std::vector<Preimage>& pts) {
    int n = 0;
    for (const auto& p : pts) n += p.multiplicity;
    return n;
}

struct PreimageOptions {
    /// Roots closer than this (pseudo-hyperbolic) are always one root.
    double merge_radius = 1e-8;
    /// Roots closer than this are merged when their centroid is itself a
    /// preimage to within back_eval_tolerance (a split multiple root).
    double cluster_radius = 1e-6;
    double back_eval_tolerance = 1e-10;
    int newton_polish_steps = 2;
};

namespace detail {

// Union-find clustering of points by pseudo-hyperbolic proximity.
inline std::vector<std::vector<std::size_t>> cluster_points(std::span<const cplx> pts, double radius) {
    std::vector<std::size_t> parent(pts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pseudo_hyperbolic(pts[i], pts[j]) < radius) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::ptrdiff_t> slot(pts.size(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return groups;
}

inline bool lexicographic_less(cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

inline void sort_preimages(std::vector<Preimage>& out) {
    std::sort(out.begin(), out.end(), [](const Preimage& a, const Preimage& b) {
        return lexicographic_less(a.point.value(), b.point.value());
    });
}

}  // namespace detail

/// All solutions of f(z) = w in the disk, with multiplicity. Clears
/// denominators into a degree-d polynomial, finds its roots, Newton-polishes
/// on f(z) - w and merges multiple roots.
inline std::vector<Preimage> preimages(const FiniteBlaschkeProduct& f, cplx w, const PreimageOptions& opts = {}) {
    if (!(std::abs(w) < 1.0)) {
        throw DomainError("preimages: target must lie inside the disk");
    }
    const auto [numerator, denominator] = f.rational_form();
    const Polynomial equation = poly_add(numerator, poly_scale(denominator, -w));
    std::vector<cplx> roots = polynomial_roots(equation);
    if (static_cast<int>(roots.size()) != f.degree()) {
        throw NumericalError("preimages: polynomial degree dropped below the map degree", 0.0);
    }
    for (auto& r : roots) {
        if (!(std::abs(r) < 1.0)) {
            throw NumericalError("preimages: root found outside the disk", std::abs(r) - 1.0);
        }
    }

    std::vector<Preimage> out;
    for (const auto& group : detail::cluster_points(roots, opts.cluster_radius)) {
        cplx centroid{0.0, 0.0};
        for (auto i : group) centroid += roots[i];
        centroid /= static_cast<double>(group.size());
        bool merge = group.size() > 1 && std::abs(f(centroid) - w) <= opts.back_eval_tolerance;
        if (!merge && group.size() > 1) {
            merge = true;
            for (auto i : group) {
                for (auto j : group) {
                    if (pseudo_hyperbolic(roots[i], roots[j]) >= opts.merge_radius) merge = false;
                }
            }
        }
        if (merge) {
            // Multiplicity-weighted Newton keeps quadratic convergence at a multiple root.
            const double m = static_cast<double>(group.size());
            for (int k = 0; k < opts.newton_polish_steps + 2; ++k) {
                const cplx slope = f.derivative(centroid);
                if (slope == cplx{0.0, 0.0}) break;
                const cplx next = centroid - m * (f(centroid) - w) / slope;
                if (!(std::abs(next) < 1.0) || std::abs(f(next) - w) > std::abs(f(centroid) - w)) break;
                centroid = next;
            }
            out.push_back({DiskPoint(centroid), static_cast<int>(group.size())});
            continue;
        }
        for (auto i : group) {
            cplx z = roots[i];
            for (int k = 0; k < opts.newton_polish_steps; ++k) {
                const cplx slope = f.derivative(z);
                if (std::abs(slope) < 1e-12) break;
                const cplx next = z - (f(z) - w) / slope;
                if (!(std::abs(next) < 1.0)) break;
                z = next;
            }
            out.push_back({DiskPoint(z), 1});
        }
    }
    double worst = 0.0;
    for (const auto& p : out) worst = std::max(worst, std::abs(f(p.point.value()) - w));
    if (worst > opts.back_eval_tolerance) {
        throw NumericalError("preimages: back-evaluation residual " + std::to_string(worst) + " above tolerance",
                             worst);
    }
    detail::sort_preimages(out);
    return out;
}

/// Preimages under a composite by stage-wise back-solving (last stage first).
inline std::vector<Preimage> preimages(const CompositeMap& f, cplx w, const PreimageOptions& opts = {}) {
    std::vector<std::pair<cplx, int>> layer{{w, 1}};
    const auto& stages = f.stages();
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        std::vector<std::pair<cplx, int>> next;
        for (const auto& [target, mult] : layer) {
            for (const auto& p : preimages(*it, target, opts)) {
                next.emplace_back(p.point.value(), mult * p.multiplicity);
            }
        }
        layer = std::move(next);
    }
    std::vector<cplx> pts;
    for (const auto& [z, m] : layer) pts.push_back(z);
    std::vector<Preimage> out;
    for (const auto& group : detail::cluster_points(pts, opts.merge_radius)) {
        int mult = 0;
        for (auto i : group) mult += layer[i].second;
        out.push_back({DiskPoint(pts[group.front()]), mult});
    }
    detail::sort_preimages(out);
    return out;
}

/// Zeros of f' in the disk, with multiplicity (degree - 1 of them).
inline std::vector<Preimage> critical_points(const FiniteBlaschkeProduct& f, const PreimageOptions& opts = {}) {
    if (f.degree() == 1) {
        return {};
    }
    const auto [p, q] = f.rational_form();
    const Polynomial wronskian = poly_add(poly_multiply(poly_derivative(p), q),
                                          poly_scale(poly_multiply(p, poly_derivative(q)), -1.0));
    std::vector<cplx> inside;
    for (const auto& r : polynomial_roots(wronskian)) {
        if (std::abs(r) < 1.0) inside.push_back(r);
    }
    std::vector<Preimage> out;
    int total = 0;
    for (const auto& group : detail::cluster_points(inside, opts.cluster_radius)) {
        cplx centroid{0.0, 0.0};
        for (auto i : group) centroid += inside[i];
        centroid /= static_cast<double>(group.size());
        out.push_back({DiskPoint(centroid), static_cast<int>(group.size())});
        total += static_cast<int>(group.size());
    }
    if (total != f.degree() - 1) {
        throw NumericalError("critical_points: found " + std::to_string(total) + " critical points, expected " +
                                 std::to_string(f.degree() - 1),
                             static_cast<double>(std::abs(total - (f.degree() - 1))));
    }
    detail::sort_preimages(out);
    return out;
}

struct BoundaryDerivativeReport {
    cplx contact{1.0, 0.0};
    cplx boundary_value;
    double angular_derivative = 0.0;
    bool finite = true;
    bool reliable = true;
    std::vector<double> radii;
    std::vector<double> quotients;
    double extrapolation_residual = 0.0;
};

/// Radial Julia quotient (1 - |f(r omega)|)/(1 - r) along r = 1 - 2^-k,
/// k = 4..24, Richardson-extrapolated to r -> 1.
template <DiskSelfMap M>
BoundaryDerivativeReport angular_derivative(const M& f, cplx omega) {
    if (std::abs(std::abs(omega) - 1.0) > Horodisk::kUnimodularTolerance) {
        throw DomainError("angular_derivative: contact point must be unimodular");
    }
    omega /= std::abs(omega);
    BoundaryDerivativeReport report;
    report.contact = omega;
    report.boundary_value = f(omega);

    constexpr int kFirst = 4;
    constexpr int kLast = 24;
    constexpr int kColumns = 3;
    std::vector<std::vector<double>> table;
    for (int k = kFirst; k <= kLast; ++k) {
        const double h = std::ldexp(1.0, -k);
        const double r = 1.0 - h;
        const DiskState image = f.step(DiskState{r * omega, h * (1.0 + r)});
        const double modulus = std::sqrt(std::max(0.0, 1.0 - image.defect));
        const double quotient = image.defect / (1.0 + modulus) / h;
        report.radii.push_back(r);
        report.quotients.push_back(quotient);
        std::vector<double> row{quotient};
        for (int j = 1; j <= kColumns && !table.empty() && j <= static_cast<int>(table.back().size()); ++j) {
            const double factor = std::ldexp(1.0, j);
            row.push_back((factor * row[j - 1] - table.back()[j - 1]) / (factor - 1.0));
        }
        table.push_back(std::move(row));
    }
    const double last = table.back().back();
    const double previous = table[table.size() - 2].back();
    report.angular_derivative = last;
    report.extrapolation_residual = std::abs(last - previous);
    if (!std::isfinite(last) || report.quotients.back() > 1e12) {
        report.finite = false;
        report.reliable = false;
        report.angular_derivative = std::numeric_limits<double>::infinity();
    } else {
        report.reliable = report.extrapolation_residual <= 1e-8 * std::max(1.0, std::abs(last));
    }
    return report;
}

}  // namespace diskdyn
