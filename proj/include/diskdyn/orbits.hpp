#pragma once

// Truncated grand orbits: the forward orbit z_0..z_N of a base point plus
// the backward preimage trees under each z_m, with multiplicities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "diskdyn/errors.hpp"
#include "diskdyn/geometry.hpp"
#include "diskdyn/selfmap.hpp"

namespace diskdyn {

struct GrandOrbitNode {
    DiskPoint point;
    /// Local degree of f^[backward_depth] at point.
    int multiplicity = 1;
    /// m such that f^[backward_depth](point) = z_m.
    int forward_index = 0;
    int backward_depth = 0;
    /// Index of the node this one is a preimage of; -1 on the forward orbit.
    long parent = -1;
};

struct GrandOrbitTruncation {
    DiskPoint base_point{0.0, 0.0};
    int forward_n = 0;
    int backward_depth = 0;
    /// Forward orbit first, then breadth-first by generation.
    std::vector<GrandOrbitNode> nodes;
    /// Cumulative sum of multiplicity * (1 - |a|) through each generation.
    std::vector<double> blaschke_partial_sums;
    bool truncated = false;
};

struct GrandOrbitOptions {
    int forward_n = 12;
    int backward_depth = 6;
    std::size_t node_cap = 20000;
    double dedup_radius = 1e-8;
};

namespace detail {

/// Euclidean grid over the disk for pseudo-hyperbolic duplicate queries.
/// Cells are 1e-6 wide; rho < 1e-8 implies Euclidean distance < 2e-8, so the
/// 3x3 neighbourhood suffices.
class PointIndex {
public:
    explicit PointIndex(double cell = 1e-6) : cell_(cell) {}

    void insert(cplx z, std::size_t id) { cells_[key(cell_of(z.real()), cell_of(z.imag()))].push_back({z, id}); }

    template <class Pred>
    bool any_near(cplx z, Pred close) const {
        const auto cx = cell_of(z.real());
        const auto cy = cell_of(z.imag());
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find(key(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (const auto& e : it->second) {
                    if (close(e.first, e.second)) return true;
                }
            }
        }
        return false;
    }

private:
    std::int64_t cell_of(double x) const { return static_cast<std::int64_t>(std::floor(x / cell_)); }
    static std::uint64_t key(std::int64_t x, std::int64_t y) {
        return (static_cast<std::uint64_t>(x) << 32) ^ (static_cast<std::uint64_t>(y) & 0xffffffffULL);
    }

    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<cplx, std::size_t>>> cells_;
};

inline std::vector<double> generation_partial_sums(const std::vector<GrandOrbitNode>& nodes, int depth) {
    std::vector<double> sums(static_cast<std::size_t>(std::max(depth, 0)) + 1, 0.0);
    for (const auto& node : nodes) {
        if (node.backward_depth < 0 || node.backward_depth > depth) continue;
        sums[node.backward_depth] += node.multiplicity * (1.0 - node.point.modulus());
    }
    for (std::size_t g = 1; g < sums.size(); ++g) sums[g] += sums[g - 1];
    return sums;
}

}  // namespace detail

/// Enumerates the grand orbit of z0 truncated at forward_n forward steps and
/// backward_depth preimage generations under each forward point.
inline GrandOrbitTruncation grand_orbit(const FiniteBlaschkeProduct& f, const DiskPoint& z0,
                                        const GrandOrbitOptions& opts = {}) {
    if (opts.forward_n < 0 || opts.backward_depth < 0) {
        throw DomainError("grand_orbit: depths must be nonnegative");
    }
    GrandOrbitTruncation out;
    out.base_point = z0;
    out.forward_n = opts.forward_n;
    out.backward_depth = opts.backward_depth;

    detail::PointIndex index;
    auto is_duplicate = [&](cplx z) {
        return index.any_near(z, [&](cplx q, std::size_t) { return pseudo_hyperbolic(q, z) < opts.dedup_radius; });
    };
    auto add = [&](GrandOrbitNode node) {
        index.insert(node.point.value(), out.nodes.size());
        out.nodes.push_back(node);
    };

    cplx z = z0.value();
    for (int m = 0; m <= opts.forward_n; ++m) {
        if (m > 0) z = f(z);
        if (out.nodes.size() >= opts.node_cap) {
            out.truncated = true;
            break;
        }
        if (m > 0 && is_duplicate(z)) continue;
        add({DiskPoint(z), 1, m, 0, -1});
    }

    std::vector<std::size_t> frontier(out.nodes.size());
    for (std::size_t i = 0; i < frontier.size(); ++i) frontier[i] = i;
    for (int g = 1; g <= opts.backward_depth && !out.truncated; ++g) {
        std::vector<std::size_t> next;
        for (std::size_t parent : frontier) {
            std::vector<Preimage> children;
            try {
                children = preimages(f, out.nodes[parent].point.value());
            } catch (const NumericalError& e) {
                throw NumericalError("grand_orbit: generation " + std::to_string(g) + ": " + e.what(), e.residual());
            } catch (const DomainError& e) {
                throw NumericalError("grand_orbit: generation " + std::to_string(g) + ": " + e.what(), 0.0);
            }
            for (const auto& child : children) {
                if (is_duplicate(child.point.value())) continue;
                if (out.nodes.size() >= opts.node_cap) {
                    out.truncated = true;
                    break;
                }
                const auto& p = out.nodes[parent];
                next.push_back(out.nodes.size());
                add({child.point, p.multiplicity * child.multiplicity, p.forward_index, g, static_cast<long>(parent)});
            }
            if (out.truncated) break;
        }
        frontier = std::move(next);
    }
    out.blaschke_partial_sums = detail::generation_partial_sums(out.nodes, opts.backward_depth);
    return out;
}

inline GrandOrbitTruncation grand_orbit(const FiniteBlaschkeProduct& f, const DiskPoint& z0, int forward_n,
                                        int backward_depth, std::size_t node_cap = 20000) {
    GrandOrbitOptions opts;
    opts.forward_n = forward_n;
    opts.backward_depth = backward_depth;
    opts.node_cap = node_cap;
    return grand_orbit(f, z0, opts);
}

/// Sum of multiplicity * (1 - |a|) over the nodes.
inline double blaschke_sum(const GrandOrbitTruncation& t) {
    double total = 0.0;
    for (const auto& node : t.nodes) total += node.multiplicity * (1.0 - node.point.modulus());
    return total;
}

struct CriticalHit {
    std::size_t node;
    cplx critical_point;
    double distance;
};

/// Nodes lying on critical points of f (pseudo-hyperbolic distance < 1e-8).
inline std::vector<CriticalHit> critical_orbit_intersection(const FiniteBlaschkeProduct& f,
                                                            const GrandOrbitTruncation& t,
                                                            double radius = 1e-8) {
    std::vector<CriticalHit> hits;
    for (const auto& c : critical_points(f)) {
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const double d = pseudo_hyperbolic(t.nodes[i].point.value(), c.point.value());
            if (d < radius) hits.push_back({i, c.point.value(), d});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const CriticalHit& a, const CriticalHit& b) { return a.node < b.node; });
    return hits;
}

/// True when the node set is closed under conjugation to within tol.
inline bool conjugation_closure_check(const GrandOrbitTruncation& t, double tol = 1e-9) {
    detail::PointIndex index(std::max(tol, 1e-6));
    for (std::size_t i = 0; i < t.nodes.size(); ++i) index.insert(t.nodes[i].point.value(), i);
    for (const auto& node : t.nodes) {
        const cplx mirror = std::conj(node.point.value());
        const bool found = index.any_near(mirror, [&](cplx q, std::size_t) { return std::abs(q - mirror) < tol; });
        if (!found) return false;
    }
    return true;
}

}  // namespace diskdyn
