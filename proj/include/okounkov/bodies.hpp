#pragma once

/**
 * @file bodies.hpp
 * @brief Global Okounkov cone, fiber bodies, and the two volume estimators.
 *
 * The cone is spanned by every materialized graded point (v, m) in
 * R^(d+r); it is an inner approximation exact at the semigroup's bound B,
 * and every downstream quantity inherits that qualification. The geometric
 * volume is d! times the Euclidean volume of the fiber polytope; the counting
 * estimator is the raw d!·#piece(k·a)/k^d sequence with no extrapolation.
 */

#include <optional>

#include "okounkov/semigroup.hpp"

namespace okounkov {

/// Cone spanned by all (v, m) with v in a piece of nonzero degree <= B.
inline const ConvexCone& global_cone(const GradedSemigroup& s) {
    return s.cached_cone([&]() {
        if (!s.has_nonzero_piece()) throw empty_cone("global_cone: semigroup has no nonzero piece");
        std::vector<ZVec> pts = s.graded_points(s.bound());
        if (pts.empty()) throw empty_cone("global_cone: semigroup has no nonzero piece");
        return cone_hull(pts, s.d() + s.r());
    });
}

/// The fiber body over direction a.
inline Polytope okounkov_body(const GradedSemigroup& s, const QVec& a) {
    check_direction(a, s.r());
    return slice_cone(global_cone(s), a, s.d());
}

/// Fiber of the singly graded restriction along a: the cone over
/// {(v, k) : v in piece(k·a')} sliced at height 1, where a' is the primitive
/// integer point on the ray. Always contained in okounkov_body(s, a')
/// with equality in complete mode.
inline Polytope ray_restricted_body(const GradedSemigroup& s, const QVec& a) {
    check_direction(a, s.r());
    ZVec prim = primitive_of(a);
    MultiDegree ap(prim.size());
    long long tot = 0;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        ap[i] = static_cast<long long>(prim[i]);
        tot += ap[i];
    }
    std::vector<ZVec> pts;
    for (long long k = 1; k * tot <= s.bound(); ++k) {
        MultiDegree m(ap.size());
        for (std::size_t i = 0; i < ap.size(); ++i) m[i] = k * ap[i];
        for (const auto& v : s.piece(m)) {
            ZVec x;
            x.reserve(v.size() + 1);
            for (auto c : v) x.push_back(Int(c));
            x.push_back(Int(k));
            pts.push_back(std::move(x));
        }
    }
    if (pts.empty()) return Polytope{s.d(), {}};
    ConvexCone c = cone_hull(pts, s.d() + 1);
    return slice_cone(c, QVec{Rat(1)}, s.d());
}

inline Rat factorial(int n) {
    Rat f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// d! times the Euclidean volume of the fiber body; 0 when the fiber is empty
/// or lower-dimensional.
inline Rat volume_geometric(const GradedSemigroup& s, const QVec& a) {
    return factorial(s.d()) * polytope_volume(okounkov_body(s, a));
}

/// Raw counting estimates d!·#piece(k·a)/k^d for the admissible k <= k_max
/// (those with k·a integral). No extrapolation is applied.
inline std::vector<std::pair<long long, Rat>> volume_counting(const GradedSemigroup& s, const QVec& a,
                                                              long long k_max) {
    check_direction(a, s.r());
    std::vector<std::pair<long long, Rat>> out;
    Rat dfact = factorial(s.d());
    for (long long k = 1; k <= k_max; ++k) {
        bool integral = true;
        for (const auto& x : a)
            if (!is_integral(Rat(k) * x)) {
                integral = false;
                break;
            }
        if (!integral) continue;
        Rat count = Rat(s.restrict_ray(a, k).size());
        Rat kd = pow_rat(Rat(k), static_cast<unsigned>(s.d()));
        out.emplace_back(k, dfact * count / kd);
    }
    return out;
}

/// Index in Z^(d+1) of the group generated by {(v, k) : v in piece(k·a')} up
/// to the bound, via Smith normal form. nullopt marks a rank-deficient group
/// (the restricted series does not affinely span, so counting estimates need
/// not converge to the geometric volume).
inline std::optional<Int> lattice_index(const GradedSemigroup& s, const QVec& a) {
    check_direction(a, s.r());
    ZVec prim = primitive_of(a);
    MultiDegree ap(prim.size());
    long long tot = 0;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        ap[i] = static_cast<long long>(prim[i]);
        tot += ap[i];
    }
    std::vector<ZVec> rows;
    for (long long k = 1; k * tot <= s.bound(); ++k) {
        MultiDegree m(ap.size());
        for (std::size_t i = 0; i < ap.size(); ++i) m[i] = k * ap[i];
        for (const auto& v : s.piece(m)) {
            ZVec x;
            x.reserve(v.size() + 1);
            for (auto c : v) x.push_back(Int(c));
            x.push_back(Int(k));
            rows.push_back(std::move(x));
        }
    }
    if (rows.empty()) throw empty_ray("lattice_index: no semigroup points along the ray");
    std::vector<Int> diag = smith_diagonal(std::move(rows));
    if (static_cast<int>(diag.size()) < s.d() + 1) return std::nullopt;
    Int index = 1;
    for (const auto& x : diag) index *= x;
    return index;
}

struct VolumeEstimate {
    QVec direction;
    Rat geometric;
    std::vector<std::pair<long long, Rat>> counting;
    std::optional<Int> index;  // nullopt: rank-deficient
};

inline VolumeEstimate estimate_volume(const GradedSemigroup& s, const QVec& a, long long k_max) {
    VolumeEstimate est;
    est.direction = a;
    est.geometric = volume_geometric(s, a);
    est.counting = volume_counting(s, a, k_max);
    est.index = lattice_index(s, a);
    return est;
}

}  // namespace okounkov
