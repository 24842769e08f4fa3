#pragma once

// One-shot reproduction of the twelve acceptance criteria with a pass/fail
// line each. Tolerances are named so a caller can override them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "diskdyn/abel.hpp"
#include "diskdyn/counting.hpp"
#include "diskdyn/dynamics.hpp"
#include "diskdyn/eigen.hpp"
#include "diskdyn/errors.hpp"
#include "diskdyn/orbits.hpp"
#include "diskdyn/presets.hpp"
#include "diskdyn/sampling.hpp"

namespace diskdyn {

struct SuiteItem {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

struct SuiteReport {
    std::vector<SuiteItem> items;

    bool all_passed() const {
        return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& i : items) {
            if (!i.passed) out.push_back(i.name);
        }
        return out;
    }
};

inline std::map<std::string, double> default_suite_tolerances() {
    return {
        {"classify.dw_point", 1e-6},
        {"classify.angular_derivative", 1e-6},
        {"step_formula.abs", 1e-12},
        {"step.zero_level", 1e-3},
        {"step.translation_constancy", 1e-12},
        {"grand_orbit.zeta0", 1e-9},
        {"grand_orbit.zeta_m", 1e-10},
        {"eigen.tau_distance", 0.1},
        {"eigen.real_axis", 1e-10},
        {"eigen.square_factor", 2.0},
        {"u_theta.residual", 1e-10},
        {"abel.h200_residual", 1e-2},
        {"abel.anchor", 1e-14},
        {"merging.level", 1e-3},
        {"property.schwarz_pick", 1e-12},
        {"property.back_evaluation", 1e-10},
        {"property.boundary_modulus", 1e-10},
        {"property.mobius_invariance", 1e-12},
        {"julia.ratio_slack", 1e-9},
        {"nevanlinna.quarter", 1e-9},
        {"nevanlinna.closed_form", 1e-12},
        {"nevanlinna.band_low", 0.83},
        {"nevanlinna.band_high", 0.87},
    };
}

struct SuiteOptions {
    std::map<std::string, double> tolerances = default_suite_tolerances();
    std::uint64_t seed = 20260101;
    int property_cases = 1000;

    /// Replaces a named tolerance; unknown names are rejected.
    void set(const std::string& name, double value) {
        const auto it = tolerances.find(name);
        if (it == tolerances.end()) {
            throw DomainError("paper_suite: unknown tolerance '" + name + "'");
        }
        it->second = value;
    }

    double tol(const std::string& name) const { return tolerances.at(name); }
};

namespace detail {

/// Collects failed conditions and a few measured values for the detail line.
class Findings {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failed_.push_back(what);
    }

    template <class T>
    void note(const std::string& key, T value) {
        std::ostringstream s;
        s.precision(6);
        s << key << "=" << value;
        notes_.push_back(s.str());
    }

    bool passed() const { return failed_.empty(); }

    std::string detail() const {
        std::string out;
        for (const auto& n : notes_) out += (out.empty() ? "" : " ") + n;
        for (const auto& f : failed_) out += (out.empty() ? "FAILED: " : "; FAILED: ") + f;
        return out;
    }

private:
    std::vector<std::string> failed_;
    std::vector<std::string> notes_;
};

inline void check_classification(const SuiteOptions& o, Findings& r) {
    const auto c = classify(presets::example61(0.6));
    const double a = 2.0 * (1.0 - 0.6) / (1.0 + 0.6);
    r.note("kind", to_string(c.kind));
    r.note("dw_error", std::abs(c.dw_point - 1.0));
    r.require(c.kind == MapKind::hyperbolic, "kind is hyperbolic");
    r.require(std::abs(c.dw_point - 1.0) <= o.tol("classify.dw_point"), "Denjoy-Wolff point is 1");
    r.require(c.angular_derivative.has_value(), "angular derivative present");
    if (c.angular_derivative) {
        r.note("angular_derivative", *c.angular_derivative);
        r.require(std::abs(*c.angular_derivative - a) <= o.tol("classify.angular_derivative"),
                  "angular derivative is 2(1-a)/(1+a)");
    }
}

inline void check_parabolic(const SuiteOptions& o, Findings& r) {
    const auto c = classify(presets::example62());
    r.note("kind", to_string(c.kind));
    r.require(c.kind == MapKind::parabolic, "kind is parabolic");
    r.require(c.angular_derivative.has_value(), "angular derivative present");
    if (c.angular_derivative) {
        r.note("angular_derivative", *c.angular_derivative);
        r.require(std::abs(*c.angular_derivative - 1.0) <= o.tol("classify.angular_derivative"),
                  "angular derivative is 1");
    }
}

inline void check_step_formula(const SuiteOptions& o, Findings& r) {
    const auto f = presets::example62();
    double z = 0.0;
    double worst = 0.0;
    for (int n = 0; n <= 100; ++n) {
        const double fz = f(z).real();
        const double formula = (1.0 - z) * (1.0 - z) / (9.0 * z * z + 14.0 * z + 9.0);
        worst = std::max(worst, std::abs(pseudo_hyperbolic(z, fz) - formula));
        z = fz;
    }
    r.note("max_error", worst);
    r.require(worst <= o.tol("step_formula.abs"), "rho(z_n, f(z_n)) matches the closed form");
}

inline void check_step_verdicts(const SuiteOptions& o, Findings& r) {
    const auto zero = hyperbolic_step(presets::example62(), DiskPoint(0.0, 0.0), 10000);
    const double smallest = *std::min_element(zero.sequence.begin(), zero.sequence.end());
    r.note("example62", to_string(zero.verdict));
    r.note("example62_min_s", smallest);
    r.require(zero.verdict == StepVerdict::zero, "Example 6.2 verdict zero");
    r.require(smallest < o.tol("step.zero_level"), "Example 6.2 s_n below 1e-3 by n = 1e4");

    const auto hyp = hyperbolic_step(presets::example61(0.6), DiskPoint(0.0, 0.0), 10000);
    r.note("example61", to_string(hyp.verdict));
    r.require(hyp.verdict == StepVerdict::positive, "Example 6.1 verdict positive");

    const auto shift = hyperbolic_step(presets::translation(), DiskPoint(0.0, 0.0), 10000);
    double spread = 0.0;
    for (double s : shift.sequence) spread = std::max(spread, std::abs(s - shift.sequence.front()));
    r.note("translation", to_string(shift.verdict));
    r.note("translation_spread", spread);
    r.require(shift.verdict == StepVerdict::positive, "translation verdict positive");
    r.require(spread <= o.tol("step.translation_constancy"), "translation s_n constant");
}

inline void check_grand_orbit(const SuiteOptions& o, Findings& r) {
    const double alpha = 0.5;
    const auto f = presets::example61(alpha);
    const auto t = grand_orbit(f, DiskPoint(0.0, 0.0), 12, 6);
    const double zeta0 = -2.0 * alpha / (1.0 + alpha * alpha);
    const double a = 2.0 * (1.0 - alpha) / (1.0 + alpha);
    std::vector<double> z{0.0};
    for (int m = 0; m < 12; ++m) z.push_back(f(z.back()).real());

    bool has_zeta0 = false;
    double zeta_error = 0.0;
    int zeta_count = 0;
    bool negative = true;
    bool gap_empty = true;
    bool escapes = true;
    for (const auto& node : t.nodes) {
        const cplx p = node.point.value();
        has_zeta0 = has_zeta0 || std::abs(p - zeta0) <= o.tol("grand_orbit.zeta0");
        if (node.backward_depth == 1 && node.forward_index >= 1) {
            const double zm1 = z[node.forward_index - 1];
            zeta_error = std::max(zeta_error, std::abs(p - (zeta0 - zm1) / (1.0 - zeta0 * zm1)));
            negative = negative && p.real() < 0.0;
            ++zeta_count;
        }
        if (std::abs(p.imag()) < 1e-12 && p.real() > 0.0 && p.real() < alpha * alpha) gap_empty = false;
        if (node.forward_index == 0 && node.backward_depth > 0) {
            escapes = escapes && julia_quotient(node.point, 1.0) > std::pow(a, -node.backward_depth);
        }
    }
    r.note("nodes", t.nodes.size());
    r.note("zeta_m_error", zeta_error);
    r.require(has_zeta0, "contains -0.8");
    r.require(zeta_count == 12 && zeta_error <= o.tol("grand_orbit.zeta_m"), "zeta_m match the Mobius formula");
    r.require(negative, "zeta_m negative");
    r.require(gap_empty, "no node in (0, 0.25)");
    r.require(escapes, "preimages of 0 escape H(1, a^-k)");
}

inline void check_eigenpair(const SuiteOptions& o, Findings& r) {
    const auto f = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 64);
    double previous = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (int depth : {4, 6, 8}) {
        const auto B = build_truncated_eigenfunction(grand_orbit(f, DiskPoint(0.0, 0.0), 12, depth));
        const double res = eigen_residual(B, f, -1.0, ring);
        decreasing = decreasing && res < previous;
        previous = res;
        r.note("residual_d" + std::to_string(depth), res);
        if (depth != 8) continue;

        const auto est = estimate_tau(B, f, ring);
        r.note("tau", est.tau);
        r.require(std::abs(est.tau + 1.0) <= o.tol("eigen.tau_distance"), "tau within 0.1 of -1");
        r.require(B(0.0) == 0.0, "B(0) = 0");
        double imag = 0.0;
        for (double x = -0.95; x <= 0.951; x += 0.05) imag = std::max(imag, std::abs(B(x).imag()));
        r.require(imag <= o.tol("eigen.real_axis"), "B real on real samples");
        const double sq = square_trick_check(B, f, ring);
        r.note("square_residual", sq);
        r.require(sq <= o.tol("eigen.square_factor") * res, "B^2 invariance within 2x the tau = -1 residual");
    }
    r.require(decreasing, "tau = -1 residual strictly decreasing over depths 4, 6, 8");
}

inline void check_u_theta(const SuiteOptions& o, Findings& r) {
    const auto f = presets::translation();
    sampling::Generator gen(o.seed);
    std::vector<cplx> pts;
    for (int k = 0; k < 1000; ++k) pts.push_back(gen.disk_point(0.99));
    double worst = 0.0;
    double largest = 0.0;
    for (double theta : {std::numbers::pi / 3.0, 1.0, 2.0 * std::numbers::pi - 0.1}) {
        const SingularEigenfunction u(theta, translation_abel_handle());
        worst = std::max(worst, eigen_residual(u, f, u.tau(), pts));
        for (const auto& z : pts) largest = std::max(largest, std::abs(u(z)));
    }
    r.note("max_residual", worst);
    r.note("max_modulus", largest);
    r.require(worst < o.tol("u_theta.residual"), "functional equation residual");
    r.require(largest <= 1.0, "|u_theta| <= 1");
}

inline void check_baker_pommerenke(const SuiteOptions& o, Findings& r) {
    const auto map = HalfPlaneMap::from_disk(presets::example62());
    const auto probes = default_abel_probes();
    const cplx z1(map.orbit(1));
    double previous = std::numeric_limits<double>::infinity();
    bool non_increasing = true;
    double anchor = 0.0;
    for (int n : {50, 100, 200, 400}) {
        const double res = abel_residual([&](cplx z) { return baker_pommerenke_h(map, z, n); }, map, probes);
        r.note("h" + std::to_string(n), res);
        non_increasing = non_increasing && res <= previous;
        previous = res;
        if (n == 200) r.require(res < o.tol("abel.h200_residual"), "h_200 residual below 1e-2");
        anchor = std::max({anchor, std::abs(baker_pommerenke_h(map, 1.0, n)),
                           std::abs(baker_pommerenke_h(map, z1, n) - 1.0)});
    }
    r.note("anchor_error", anchor);
    r.require(non_increasing, "residual non-increasing over 50, 100, 200, 400");
    r.require(anchor <= o.tol("abel.anchor"), "anchors h_n(z0) = 0, h_n(z1) = 1");
}

inline void check_merging(const SuiteOptions& o, Findings& r) {
    const auto d = orbit_merging(presets::example62(), DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.5), 100000);
    bool non_increasing = true;
    long first = -1;
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (n > 0) non_increasing = non_increasing && d[n] <= d[n - 1];
        if (first < 0 && d[n] < o.tol("merging.level")) first = static_cast<long>(n);
    }
    r.note("first_below", first);
    r.note("final", d.back());
    r.require(non_increasing, "distance non-increasing");
    r.require(first >= 0, "distance below 1e-3 for some n <= 1e5");
}

inline void check_properties(const SuiteOptions& o, Findings& r) {
    sampling::Generator gen(o.seed);
    const int cases = o.property_cases;
    int schwarz = 0, completeness = 0, multiplicative = 0, boundary = 0, invariance = 0;
    for (int k = 0; k < cases; ++k) {
        const auto f = gen.blaschke(4);
        const cplx z = gen.disk_point(0.99);
        const cplx w = gen.disk_point(0.99);
        if (pseudo_hyperbolic(f(z), f(w)) > pseudo_hyperbolic(z, w) + o.tol("property.schwarz_pick")) ++schwarz;
    }
    for (int k = 0; k < cases; ++k) {
        const auto f = gen.blaschke(4);
        const cplx w = gen.disk_point(0.95);
        const auto pre = preimages(f, w);
        bool ok = total_multiplicity(pre) == f.degree();
        for (const auto& p : pre) ok = ok && std::abs(f(p.point.value()) - w) <= o.tol("property.back_evaluation");
        if (!ok) ++completeness;
    }
    for (int k = 0; k < cases; ++k) {
        const auto f = gen.blaschke(3);
        const auto g = gen.blaschke(3);
        const auto fg = compose(f, g);
        if (fg.degree() != f.degree() * g.degree() ||
            total_multiplicity(preimages(fg, gen.disk_point(0.95))) != f.degree() * g.degree()) {
            ++multiplicative;
        }
    }
    for (int k = 0; k < cases; ++k) {
        const auto f = gen.blaschke(4, 0.99);
        if (std::abs(std::abs(f(gen.unimodular())) - 1.0) > o.tol("property.boundary_modulus")) ++boundary;
    }
    for (int k = 0; k < cases; ++k) {
        const cplx a = gen.disk_point(0.99);
        const cplx z = gen.disk_point(0.99);
        const cplx w = gen.disk_point(0.99);
        const double moved = pseudo_hyperbolic(mobius_factor(a, z), mobius_factor(a, w));
        if (std::abs(moved - pseudo_hyperbolic(z, w)) > o.tol("property.mobius_invariance")) ++invariance;
    }
    r.note("cases", cases);
    r.require(schwarz == 0, std::to_string(schwarz) + " Schwarz-Pick violations");
    r.require(completeness == 0, std::to_string(completeness) + " preimage completeness violations");
    r.require(multiplicative == 0, std::to_string(multiplicative) + " degree multiplicativity violations");
    r.require(boundary == 0, std::to_string(boundary) + " boundary modulus violations");
    r.require(invariance == 0, std::to_string(invariance) + " Mobius invariance violations");
}

inline void check_julia(const SuiteOptions& o, Findings& r) {
    const auto rep = julia_containment_check(presets::example61(0.5), 1.0, 1.0, 1000, o.seed);
    r.note("angular_derivative", rep.angular_derivative);
    r.note("max_ratio", rep.max_ratio);
    r.require(std::abs(rep.angular_derivative * rep.level - 2.0 / 3.0) <= 1e-6, "target horodisk H(1, 2/3)");
    r.require(rep.max_ratio <= 1.0 + o.tol("julia.ratio_slack"), "quotient ratio <= 1 + 1e-9");
}

inline void check_nevanlinna(const SuiteOptions& o, Findings& r) {
    const double quarter = nevanlinna(presets::example61(0.5), DiskPoint(0.25, 0.0)).value;
    r.note("N_quarter", quarter);
    r.require(std::abs(quarter - 1.2) <= o.tol("nevanlinna.quarter"), "N(1/4) = 1.2");

    sampling::Generator gen(o.seed);
    double closed = 0.0;
    for (int k = 0; k < 200; ++k) {
        const DiskPoint w(gen.disk_point(0.99));
        closed = std::max(closed, std::abs(nevanlinna(FiniteBlaschkeProduct::identity(), w).value - (1.0 - w.modulus())));
        closed = std::max(closed, std::abs(nevanlinna(presets::power2(), w).value - 2.0 * (1.0 - std::sqrt(w.modulus()))));
    }
    r.note("closed_form_error", closed);
    r.require(closed <= o.tol("nevanlinna.closed_form"), "identity and z^2 closed forms");

    const auto scan = inner_comparability_scan(presets::example61(0.5), log_spaced_radii(0.9, 0.999, 30));
    r.note("ratio_min", scan.min_ratio);
    r.note("ratio_max", scan.max_ratio);
    r.require(scan.min_ratio >= o.tol("nevanlinna.band_low") && scan.max_ratio <= o.tol("nevanlinna.band_high"),
              "comparability ratio inside [0.83, 0.87]");
}

}  // namespace detail

inline SuiteReport paper_suite(const SuiteOptions& opts = {}) {
    const std::vector<std::pair<std::string, std::function<void(const SuiteOptions&, detail::Findings&)>>> checks{
        {"classification-example61", detail::check_classification},
        {"classification-example62", detail::check_parabolic},
        {"closed-form-step", detail::check_step_formula},
        {"step-verdicts", detail::check_step_verdicts},
        {"grand-orbit-example61", detail::check_grand_orbit},
        {"eigenpair-example61", detail::check_eigenpair},
        {"u-theta-translation", detail::check_u_theta},
        {"baker-pommerenke-example62", detail::check_baker_pommerenke},
        {"orbit-merging-example62", detail::check_merging},
        {"property-suites", detail::check_properties},
        {"julia-containment", detail::check_julia},
        {"nevanlinna", detail::check_nevanlinna},
    };
    SuiteReport report;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        detail::Findings findings;
        const auto start = std::chrono::steady_clock::now();
        try {
            checks[k].second(opts, findings);
        } catch (const std::exception& e) {
            findings.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.items.push_back({static_cast<int>(k + 1), checks[k].first, findings.passed(), findings.detail(), seconds});
    }
    return report;
}

}  // namespace diskdyn
