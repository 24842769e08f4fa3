#pragma once

// Named maps used by the CLI and the test suites.

#include <string>

#include "diskdyn/errors.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn::presets {

/// phi(z) = ((z + alpha)/(1 + alpha z))^2. The inner factor equals m_{-alpha}
/// exactly, so gamma = 1 and phi(0) = alpha^2.
inline FiniteBlaschkeProduct example61(double alpha = 0.5) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("example61: alpha must lie in (0, 1)");
    }
    return {cplx{1.0, 0.0}, {{cplx{-alpha, 0.0}, 2}}};
}

/// The alpha = 1/3 member of the family: parabolic, zero hyperbolic step.
inline FiniteBlaschkeProduct example62() { return example61(1.0 / 3.0); }

/// The right half-plane translation w -> w + i carried to the disk by
/// w = (1 + z)/(1 - z): f(z) = ((2 - i) z + i) / ((2 + i) - i z).
inline FiniteBlaschkeProduct translation() {
    const cplx i{0.0, 1.0};
    const cplx zero = -i / (2.0 - i);
    return FiniteBlaschkeProduct::from_rational((2.0 - i) / (2.0 + i), {{zero, 1}});
}

/// z -> z^2, an elliptic control with interior fixed point 0.
inline FiniteBlaschkeProduct power2() { return {cplx{1.0, 0.0}, {{cplx{0.0, 0.0}, 2}}}; }

/// Default exact Abel function of the translation preset, h(z) = -i (1 + z)/(1 - z).
inline cplx translation_abel(cplx z) { return cplx{0.0, -1.0} * (1.0 + z) / (1.0 - z); }

inline FiniteBlaschkeProduct by_name(const std::string& name, double alpha = 0.5) {
    if (name == "example61") return example61(alpha);
    if (name == "example62") return example62();
    if (name == "translation") return translation();
    if (name == "power2") return power2();
    throw DomainError("unknown preset '" + name + "'");
}

}  // namespace diskdyn::presets
