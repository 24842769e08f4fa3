#pragma once

// Eigenfunctions of composition operators, Psi o f = tau Psi: truncated
// grand-orbit Blaschke products, tau estimation, u_theta = exp(i k h) built
// from an Abel function h, and Frostman shifts m_a o u.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/orbits.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn {

using Evaluation = std::function<cplx(cplx)>;

struct TruncatedEigenfunction {
    /// prod m_a^mult over the truncation nodes in node order, gamma = 1.
    FiniteBlaschkeProduct product;
    std::shared_ptr<const GrandOrbitTruncation> source;
    std::optional<cplx> tau_estimate;
    double residual = std::numeric_limits<double>::quiet_NaN();

    cplx operator()(cplx z) const { return product(z); }
};

inline TruncatedEigenfunction build_truncated_eigenfunction(const GrandOrbitTruncation& truncation) {
    if (truncation.nodes.empty()) {
        throw DomainError("build_truncated_eigenfunction: empty truncation");
    }
    std::vector<Zero> zeros;
    zeros.reserve(truncation.nodes.size());
    for (const auto& node : truncation.nodes) zeros.push_back({node.point.value(), node.multiplicity});
    return {FiniteBlaschkeProduct(cplx{1.0, 0.0}, std::move(zeros)),
            std::make_shared<const GrandOrbitTruncation>(truncation), std::nullopt,
            std::numeric_limits<double>::quiet_NaN()};
}

struct TauEstimate {
    cplx tau;
    /// max |ratio - tau| over the admissible samples.
    double dispersion;
    std::size_t samples_used;
    std::size_t samples_offered;
};

namespace detail {

/// Weiszfeld iteration for the geometric median, summed in sorted order.
inline cplx geometric_median(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), lexicographic_less);
    cplx m = 0.0;
    for (const auto& p : pts) m += p;
    m /= static_cast<double>(pts.size());
    for (int it = 0; it < 500; ++it) {
        cplx num = 0.0;
        double den = 0.0;
        for (const auto& p : pts) {
            const double w = 1.0 / std::max(std::abs(p - m), 1e-300);
            num += w * p;
            den += w;
        }
        const cplx next = num / den;
        const bool done = std::abs(next - m) <= 1e-15 * (1.0 + std::abs(m));
        m = next;
        if (done) break;
    }
    return m;
}

inline bool far_from(cplx z, std::span<const Zero> zeros, double radius) {
    return std::all_of(zeros.begin(), zeros.end(),
                       [&](const Zero& a) { return pseudo_hyperbolic(z, a.point) > radius; });
}

}  // namespace detail

inline constexpr double kAdmissibleRadius = 0.05;
inline constexpr std::size_t kMinTauSamples = 8;

/// Geometric median of psi(f(z))/psi(z) over samples with z and f(z) at
/// pseudo-hyperbolic distance > 0.05 from every listed zero.
template <DiskSelfMap M>
TauEstimate estimate_tau(const Evaluation& psi, const M& f, std::span<const cplx> samples,
                         std::span<const Zero> zeros = {}) {
    std::vector<cplx> ratios;
    for (const auto& z : samples) {
        const cplx fz = f(z);
        if (!detail::far_from(z, zeros, kAdmissibleRadius) || !detail::far_from(fz, zeros, kAdmissibleRadius)) {
            continue;
        }
        const cplx denom = psi(z);
        if (denom == 0.0) continue;
        ratios.push_back(psi(fz) / denom);
    }
    if (ratios.size() < kMinTauSamples) {
        throw DomainError("estimate_tau: only " + std::to_string(ratios.size()) +
                          " admissible samples (need 8); try a sample ring farther from the zeros");
    }
    TauEstimate out{detail::geometric_median(ratios), 0.0, ratios.size(), samples.size()};
    for (const auto& r : ratios) out.dispersion = std::max(out.dispersion, std::abs(r - out.tau));
    return out;
}

template <DiskSelfMap M>
TauEstimate estimate_tau(const TruncatedEigenfunction& B, const M& f, std::span<const cplx> samples) {
    return estimate_tau([&](cplx z) { return B(z); }, f, samples, B.product.zeros());
}

/// max over samples of |psi(f(z)) - tau psi(z)|.
template <class Psi, DiskSelfMap M>
double eigen_residual(const Psi& psi, const M& f, cplx tau, std::span<const cplx> samples) {
    double worst = 0.0;
    for (const auto& z : samples) worst = std::max(worst, std::abs(psi(f(z)) - tau * psi(z)));
    return worst;
}

/// Fills tau_estimate and residual (against the estimate).
template <DiskSelfMap M>
void calibrate(TruncatedEigenfunction& B, const M& f, std::span<const cplx> samples) {
    const auto est = estimate_tau(B, f, samples);
    B.tau_estimate = est.tau;
    B.residual = eigen_residual(B, f, est.tau, samples);
}

/// max over samples of |psi(f(z))^2 - psi(z)^2|.
template <class Psi, DiskSelfMap M>
double square_trick_check(const Psi& psi, const M& f, std::span<const cplx> samples) {
    double worst = 0.0;
    for (const auto& z : samples) {
        const cplx a = psi(f(z));
        const cplx b = psi(z);
        worst = std::max(worst, std::abs(a * a - b * b));
    }
    return worst;
}

/// n points on |z| = radius at angles 2 pi (k + 1/2) / n.
inline std::vector<cplx> sample_ring(double radius, int n) {
    if (!(radius >= 0.0 && radius < 1.0) || n < 1) {
        throw DomainError("sample_ring: need 0 <= radius < 1 and n >= 1");
    }
    std::vector<cplx> out;
    for (int k = 0; k < n; ++k) out.push_back(std::polar(radius, 2.0 * std::numbers::pi * (k + 0.5) / n));
    return out;
}

/// Which half-plane the image of h lies in.
enum class AbelOrientation { upper, lower };

struct AbelHandle {
    Evaluation h;
    AbelOrientation orientation = AbelOrientation::upper;
};

/// h(z) = -i (1 + z)/(1 - z) for the translation preset; Im h = -Re w < 0.
inline AbelHandle translation_abel_handle() {
    return {[](cplx z) { return cplx{0.0, -1.0} * (1.0 + z) / (1.0 - z); }, AbelOrientation::lower};
}

/// u(z) = exp(i k h(z)). For an upper handle k = theta. For a lower handle
/// k = theta - 2 pi (0 when theta = 0): same tau = e^{i theta}, and |u| <= 1
/// on the image side.
class SingularEigenfunction {
public:
    static constexpr double kWarnTolerance = 1e-9;

    SingularEigenfunction(double theta, AbelHandle handle) : theta_(theta), handle_(std::move(handle)) {
        if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
            throw DomainError("u_theta: theta must lie in [0, 2 pi]");
        }
        exponent_ = (handle_.orientation == AbelOrientation::upper || theta == 0.0) ? theta
                                                                                    : theta - 2.0 * std::numbers::pi;
    }

    double theta() const noexcept { return theta_; }
    double exponent() const noexcept { return exponent_; }
    cplx tau() const { return std::polar(1.0, theta_); }
    const AbelHandle& handle() const noexcept { return handle_; }

    cplx operator()(cplx z) const { return std::exp(cplx{0.0, exponent_} * handle_.h(z)); }

    /// h(z) on the wrong side of the real axis by more than 1e-9.
    bool unbounded_at(cplx z) const {
        const double im = handle_.h(z).imag();
        return handle_.orientation == AbelOrientation::upper ? im < -kWarnTolerance : im > kWarnTolerance;
    }

private:
    double theta_;
    double exponent_ = 0.0;
    AbelHandle handle_;
};

struct UThetaSample {
    cplx value;
    bool warning;
};

inline UThetaSample u_theta(double theta, const AbelHandle& handle, const DiskPoint& z) {
    const SingularEigenfunction u(theta, handle);
    return {u(z.value()), u.unbounded_at(z.value())};
}

/// Psi_a = m_a o u.
struct FrostmanShift {
    Evaluation u;
    cplx a;

    cplx operator()(cplx z) const { return mobius_factor(a, u(z)); }

    /// sup |m_a'| over the disk; residual(Psi_a) <= this * residual(u).
    double lipschitz_bound() const {
        const double r = std::abs(a);
        return (1.0 + r) / (1.0 - r);
    }
};

inline FrostmanShift frostman_shift(Evaluation u, const DiskPoint& a) { return {std::move(u), a.value()}; }

struct EigenReport {
    int depth;
    cplx tau;
    double residual;
    std::size_t sample_count;
    std::string map_preset;
};

}  // namespace diskdyn
