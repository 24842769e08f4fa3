#pragma once

// Disk and right half-plane primitives: pseudo-hyperbolic metric, Moebius
// factors, horodisks, Julia quotients and the Cayley transport.

#include <cmath>
#include <complex>

#include "diskdyn/errors.hpp"

namespace diskdyn {

using cplx = std::complex<double>;
/// Extended precision for half-plane coordinates, which grow without bound.
using wide = std::complex<long double>;

namespace detail {

// log(1 + d) without losing the low-order bits of d when |d| is small.
template <class T>
std::complex<T> log1p(std::complex<T> d) {
    const T re = d.real();
    const T im = d.imag();
    const T modulus_term = T(0.5) * std::log1p(T(2) * re + re * re + im * im);
    return {modulus_term, std::atan2(im, T(1) + re)};
}

// exp(s) - 1, accurate for small |s|.
template <class T>
std::complex<T> expm1(std::complex<T> s) {
    const T x = s.real();
    const T y = s.imag();
    const T half_sin = std::sin(T(0.5) * y);
    const T cos_minus_one = T(-2) * half_sin * half_sin;
    const T em1 = std::expm1(x);
    return {em1 * std::cos(y) + cos_minus_one, std::exp(x) * std::sin(y)};
}

}  // namespace detail

/// A point of the open unit disk. Construction rejects |z| >= 1 - 1e-15.
class DiskPoint {
public:
    static constexpr double kBoundaryMargin = 1e-15;

    explicit DiskPoint(cplx value) : value_(value) {
        if (!(std::abs(value) < 1.0 - kBoundaryMargin)) {
            throw DomainError("point is not strictly inside the unit disk");
        }
    }
    DiskPoint(double re, double im) : DiskPoint(cplx{re, im}) {}

    cplx value() const noexcept { return value_; }
    double modulus() const noexcept { return std::abs(value_); }

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    cplx value_;
};

/// H(omega, M) = { z : |z - omega|^2 / (1 - |z|^2) < M }, a Euclidean disk
/// internally tangent to the unit circle at omega.
class Horodisk {
public:
    static constexpr double kUnimodularTolerance = 1e-12;

    Horodisk(cplx contact, double level) : contact_(contact), level_(level) {
        if (std::abs(std::abs(contact) - 1.0) > kUnimodularTolerance) {
            throw DomainError("horodisk contact point must be unimodular");
        }
        if (!(level > 0.0) || !std::isfinite(level)) {
            throw DomainError("horodisk level must be positive and finite");
        }
    }

    cplx contact() const noexcept { return contact_; }
    double level() const noexcept { return level_; }
    cplx center() const noexcept { return contact_ / (level_ + 1.0); }
    double radius() const noexcept { return level_ / (level_ + 1.0); }

    bool contains(cplx z) const;

private:
    cplx contact_;
    double level_;
};

inline double pseudo_hyperbolic(cplx z, cplx w) {
    return std::abs((w - z) / (1.0 - std::conj(w) * z));
}

inline double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
    return pseudo_hyperbolic(z.value(), w.value());
}

/// d_h = log((1 + rho) / (1 - rho)).
inline double hyperbolic_distance_from_rho(double rho) {
    return std::log1p(rho) - std::log1p(-rho);
}

inline double hyperbolic_distance(const DiskPoint& z, const DiskPoint& w) {
    return hyperbolic_distance_from_rho(pseudo_hyperbolic(z, w));
}

/// m_a(z) = -(conj(a)/|a|) (z - a) / (1 - conj(a) z), with m_0 the identity and m_a(0) = |a|.
inline cplx mobius_factor(cplx a, cplx z) {
    const double r = std::abs(a);
    if (r == 0.0) {
        return z;
    }
    return -(std::conj(a) / r) * (z - a) / (1.0 - std::conj(a) * z);
}

inline cplx mobius_factor(const DiskPoint& a, const DiskPoint& z) {
    return mobius_factor(a.value(), z.value());
}

/// 1 - |m_a(z)|^2 from z_defect = 1 - |z|^2, without cancellation.
inline double mobius_defect(cplx a, cplx z, double z_defect) {
    const double a_defect = 1.0 - std::norm(a);
    return a_defect * z_defect / std::norm(1.0 - std::conj(a) * z);
}

/// |z - omega|^2 / (1 - |z|^2); z lies in H(omega, M) iff this is < M.
inline double julia_quotient(cplx z, cplx omega) {
    if (std::abs(std::abs(omega) - 1.0) > Horodisk::kUnimodularTolerance) {
        throw DomainError("julia_quotient: omega must be unimodular");
    }
    return std::norm(z - omega) / (1.0 - std::norm(z));
}

inline double julia_quotient(const DiskPoint& z, cplx omega) {
    return julia_quotient(z.value(), omega);
}

inline bool Horodisk::contains(cplx z) const {
    return julia_quotient(z, contact_) < level_;
}

/// (1 + z) / (1 - z): disk -> right half-plane, boundary point 1 -> infinity.
inline cplx cayley_to_rhp(cplx z) {
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("cayley_to_rhp: point is not inside the disk");
    }
    return (1.0 + z) / (1.0 - z);
}

inline cplx cayley_to_rhp(const DiskPoint& z) { return cayley_to_rhp(z.value()); }

inline cplx cayley_from_rhp(cplx w) {
    if (!(w.real() > 0.0)) {
        throw DomainError("cayley_from_rhp: point is not in the right half-plane");
    }
    return (w - 1.0) / (w + 1.0);
}

/// Pseudo-hyperbolic distance of the right half-plane,
/// |(w - z) / (w + conj(z))|; the Cayley transport is an isometry onto it.
template <class T>
double halfplane_pseudo_hyperbolic(std::complex<T> z, std::complex<T> w) {
    return static_cast<double>(std::abs((w - z) / (w + std::conj(z))));
}

}  // namespace diskdyn
