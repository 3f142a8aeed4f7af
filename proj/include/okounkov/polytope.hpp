#pragma once

/**
 * @file polytope.hpp
 * @brief Exact rational polytopes: hulls, volumes, Minkowski sums, lattice points.
 *
 * A Polytope stores only its vertex set, lex-sorted; value equality is
 * structural equality. The minimal affine H-representation is derived on
 * demand through homogenization (a point p becomes the ray (p,1); facets of
 * that cone are affine halfspaces of the polytope), so the double-description
 * kernel is the single source of geometric truth.
 */

#include <algorithm>
#include <map>
#include <vector>

#include "okounkov/dd.hpp"

namespace okounkov {

struct Polytope {
    int dim = 0;
    std::vector<QVec> vertices;  // extreme points only, lex-sorted

    bool empty() const { return vertices.empty(); }
    bool operator==(const Polytope& o) const { return dim == o.dim && vertices == o.vertices; }
};

/// Halfspace {x : <normal,x> + offset >= 0} with integer data.
struct AffineHalfspace {
    ZVec normal;
    Int offset;
};

namespace detail {

/// Homogenizes a rational point to the primitive integer ray (p, 1)·lcm.
inline ZVec homogenize(const QVec& p) {
    QVec h = p;
    h.push_back(Rat(1));
    return primitive_of(h);
}

/// Facet normals of the cone spanned by the homogenized vertex rays. For a
/// lower-dimensional polytope this includes the +-pairs spanning the ambient
/// affine hull's orthogonal complement.
inline std::vector<ZVec> homogeneous_facets(const std::vector<QVec>& vertices, int dim) {
    std::vector<ZVec> gens;
    gens.reserve(vertices.size());
    for (const auto& v : vertices) gens.push_back(homogenize(v));
    DDResult dual = dual_rays(gens, dim + 1);
    std::vector<ZVec> normals = dual.rays;
    for (const auto& l : dual.lineality) {
        normals.push_back(l);
        ZVec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        normals.push_back(std::move(neg));
    }
    std::sort(normals.begin(), normals.end(), lex_less<ZVec>);
    return normals;
}

}  // namespace detail

/// Convex hull with canonical (lex-sorted, extreme-only) vertex output.
inline Polytope convex_hull(const std::vector<QVec>& points, int dim) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw dimension_mismatch("convex_hull: point length mismatch");
    Polytope out;
    out.dim = dim;
    if (points.empty()) return out;

    std::vector<ZVec> normals = detail::homogeneous_facets(points, dim);
    detail::DDResult primal = detail::dual_rays(normals, dim + 1);
    if (!primal.lineality.empty())
        throw internal_error("convex_hull: homogenization cone not pointed");
    for (const auto& r : primal.rays) {
        Int t = r.back();
        if (t <= 0) throw internal_error("convex_hull: ray below the t=1 chart");
        QVec v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = Rat(r[static_cast<std::size_t>(i)], t);
        out.vertices.push_back(std::move(v));
    }
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less<QVec>);
    return out;
}

/// Minimal affine H-representation. Lower-dimensional polytopes yield
/// equality pairs; a point yields its affine hull cut down to itself.
inline std::vector<AffineHalfspace> affine_halfspaces(const Polytope& p) {
    if (p.empty()) throw empty_polytope("affine_halfspaces: empty polytope");
    std::vector<AffineHalfspace> out;
    for (auto& n : detail::homogeneous_facets(p.vertices, p.dim)) {
        AffineHalfspace h;
        h.offset = n.back();
        n.pop_back();
        h.normal = std::move(n);
        out.push_back(std::move(h));
    }
    return out;
}

inline bool satisfies(const AffineHalfspace& h, const QVec& x) {
    return dot(h.normal, x) + Rat(h.offset) >= 0;
}

inline bool contains_point(const Polytope& p, const QVec& x) {
    if (static_cast<int>(x.size()) != p.dim)
        throw dimension_mismatch("contains_point: length mismatch");
    if (p.empty()) return false;
    for (const auto& h : affine_halfspaces(p))
        if (!satisfies(h, x)) return false;
    return true;
}

/// Vertex-against-facet containment test; empty Q is contained in anything.
inline bool contains(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw dimension_mismatch("contains: ambient dimensions differ");
    if (q.empty()) return true;
    if (p.empty()) return false;
    auto facets = affine_halfspaces(p);
    for (const auto& v : q.vertices)
        for (const auto& h : facets)
            if (!satisfies(h, v)) return false;
    return true;
}

namespace detail {

/// Triangulates a full-dimensional polytope given by vertices into simplices,
/// returned as index tuples. Recursion: fan from vertex 0 over facets missing
/// it; each facet is projected by dropping one coordinate (an affine bijection
/// on the facet's hyperplane, so the face lattice is preserved).
inline std::vector<std::vector<int>> triangulate(const std::vector<QVec>& verts, int dim) {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(verts.size()) < dim + 1) return out;
    if (dim == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(verts.size()); ++i) {
            if (verts[static_cast<std::size_t>(i)][0] < verts[static_cast<std::size_t>(lo)][0]) lo = i;
            if (verts[static_cast<std::size_t>(i)][0] > verts[static_cast<std::size_t>(hi)][0]) hi = i;
        }
        if (verts[static_cast<std::size_t>(lo)][0] != verts[static_cast<std::size_t>(hi)][0])
            out.push_back({lo, hi});
        return out;
    }

    std::vector<ZVec> normals = homogeneous_facets(verts, dim);
    const QVec& apex = verts[0];
    for (const auto& n : normals) {
        Rat apex_val = Rat(n.back());
        for (int i = 0; i < dim; ++i) apex_val += Rat(n[static_cast<std::size_t>(i)]) * apex[static_cast<std::size_t>(i)];
        if (apex_val == 0) continue;  // apex lies on this facet: zero-height fan cone

        std::vector<int> facet_idx;
        for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
            Rat val = Rat(n.back());
            for (int i = 0; i < dim; ++i)
                val += Rat(n[static_cast<std::size_t>(i)]) * verts[static_cast<std::size_t>(vi)][static_cast<std::size_t>(i)];
            if (val == 0) facet_idx.push_back(vi);
        }
        if (static_cast<int>(facet_idx.size()) < dim) continue;  // tangent hyperplane, not a facet

        int drop = 0;
        while (drop < dim && n[static_cast<std::size_t>(drop)] == 0) ++drop;
        if (drop == dim) continue;  // the trivial (0,...,0,1) halfspace

        std::vector<QVec> proj;
        proj.reserve(facet_idx.size());
        for (int vi : facet_idx) {
            QVec q;
            q.reserve(static_cast<std::size_t>(dim - 1));
            for (int i = 0; i < dim; ++i)
                if (i != drop) q.push_back(verts[static_cast<std::size_t>(vi)][static_cast<std::size_t>(i)]);
            proj.push_back(std::move(q));
        }
        for (const auto& sub : triangulate(proj, dim - 1)) {
            std::vector<int> simplex{0};
            for (int si : sub) simplex.push_back(facet_idx[static_cast<std::size_t>(si)]);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

}  // namespace detail

/// Exact Lebesgue volume in the ambient dimension; 0 for empty or
/// lower-dimensional input.
inline Rat polytope_volume(const Polytope& p) {
    if (p.dim < 1) throw dimension_mismatch("polytope_volume: dimension must be positive");
    int n = p.dim;
    if (static_cast<int>(p.vertices.size()) < n + 1) {
        if (n == 1 && p.vertices.size() == 2) return p.vertices[1][0] - p.vertices[0][0];
        return 0;
    }
    {
        std::vector<QVec> diffs;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            QVec d(p.vertices[i]);
            for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] -= p.vertices[0][static_cast<std::size_t>(j)];
            diffs.push_back(std::move(d));
        }
        if (rank_of(diffs) < n) return 0;
    }
    if (n == 1) return p.vertices.back()[0] - p.vertices.front()[0];

    Rat factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    Rat vol = 0;
    for (const auto& simplex : detail::triangulate(p.vertices, n)) {
        std::vector<QVec> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (std::size_t k = 1; k < simplex.size(); ++k) {
            QVec d = p.vertices[static_cast<std::size_t>(simplex[k])];
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(j)] -= p.vertices[static_cast<std::size_t>(simplex[0])][static_cast<std::size_t>(j)];
            rows.push_back(std::move(d));
        }
        vol += abs(determinant_q(std::move(rows)));
    }
    return vol / factorial;
}

/// Hull of { sum_j w_j v_j : v_j vertex of P_j }, skipping weight-0 terms.
/// All weights zero gives the origin; a positively weighted empty summand
/// absorbs everything to the empty polytope.
inline Polytope minkowski_weighted(const std::vector<Polytope>& polys, const std::vector<Rat>& weights) {
    if (polys.empty()) throw empty_input("minkowski_weighted: no summands");
    if (polys.size() != weights.size())
        throw dimension_mismatch("minkowski_weighted: weight count mismatch");
    int dim = polys[0].dim;
    for (const auto& p : polys)
        if (p.dim != dim) throw dimension_mismatch("minkowski_weighted: ambient dimensions differ");
    for (const auto& w : weights)
        if (w < 0) throw negative_entry("minkowski_weighted: negative weight");

    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < polys.size(); ++j) {
        if (weights[j] == 0) continue;
        if (polys[j].empty()) return Polytope{dim, {}};
        active.push_back(j);
    }
    std::vector<QVec> points;
    if (active.empty()) {
        points.emplace_back(static_cast<std::size_t>(dim), Rat(0));
        return convex_hull(points, dim);
    }
    std::vector<std::size_t> choice(active.size(), 0);
    while (true) {
        QVec s(static_cast<std::size_t>(dim), Rat(0));
        for (std::size_t k = 0; k < active.size(); ++k) {
            const auto& v = polys[active[k]].vertices[choice[k]];
            for (int i = 0; i < dim; ++i) s[static_cast<std::size_t>(i)] += weights[active[k]] * v[static_cast<std::size_t>(i)];
        }
        points.push_back(std::move(s));
        std::size_t k = 0;
        while (k < active.size() && ++choice[k] == polys[active[k]].vertices.size()) {
            choice[k] = 0;
            ++k;
        }
        if (k == active.size()) break;
    }
    return convex_hull(points, dim);
}

inline Polytope translate(const Polytope& p, const QVec& t) {
    if (static_cast<int>(t.size()) != p.dim) throw dimension_mismatch("translate: length mismatch");
    Polytope out;
    out.dim = p.dim;
    out.vertices = p.vertices;
    for (auto& v : out.vertices)
        for (int i = 0; i < p.dim; ++i) v[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i)];
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less<QVec>);
    return out;
}

/// All integer points of P, ascending lex: bounding-box sweep filtered by the
/// facet inequalities.
inline std::vector<ZVec> lattice_points(const Polytope& p) {
    std::vector<ZVec> out;
    if (p.empty()) return out;
    int n = p.dim;
    auto facets = affine_halfspaces(p);
    std::vector<Int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat mn = p.vertices[0][static_cast<std::size_t>(i)], mx = mn;
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[static_cast<std::size_t>(i)]);
            mx = std::max(mx, v[static_cast<std::size_t>(i)]);
        }
        lo[static_cast<std::size_t>(i)] = ceil_rat(mn);
        hi[static_cast<std::size_t>(i)] = floor_rat(mx);
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return out;
    }
    ZVec x = lo;
    while (true) {
        bool inside = true;
        for (const auto& h : facets) {
            Int v = h.offset + dot(h.normal, x);
            if (v < 0) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(x);
        int k = n - 1;
        while (k >= 0) {
            if (++x[static_cast<std::size_t>(k)] <= hi[static_cast<std::size_t>(k)]) break;
            x[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

/// A polytope with integer vertices, stored in canonical hull form.
struct LatticePolytope {
    int dim = 0;
    std::vector<ZVec> vertices;

    bool operator==(const LatticePolytope& o) const { return dim == o.dim && vertices == o.vertices; }
};

inline Polytope to_polytope(const LatticePolytope& lp) {
    Polytope p;
    p.dim = lp.dim;
    p.vertices.reserve(lp.vertices.size());
    for (const auto& v : lp.vertices) p.vertices.push_back(to_qvec(v));
    return p;
}

/// Canonicalizes integer points into a LatticePolytope (hull vertex set).
inline LatticePolytope lattice_polytope(const std::vector<ZVec>& points, int dim) {
    std::vector<QVec> q;
    q.reserve(points.size());
    for (const auto& v : points) q.push_back(to_qvec(v));
    Polytope hull = convex_hull(q, dim);
    LatticePolytope out;
    out.dim = dim;
    out.vertices.reserve(hull.vertices.size());
    for (const auto& v : hull.vertices) {
        ZVec z(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!is_integral(v[i])) throw internal_error("lattice_polytope: non-integer hull vertex");
            z[i] = numerator(v[i]);
        }
        out.vertices.push_back(std::move(z));
    }
    return out;
}

}  // namespace okounkov
