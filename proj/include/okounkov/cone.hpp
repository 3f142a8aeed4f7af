#pragma once

/**
 * @file cone.hpp
 * @brief Polyhedral cones through the origin: canonical V- and H-representations.
 *
 * cone_hull runs the double-description kernel twice (polar, then primal), so
 * every ConvexCone carries a cross-validated pair of representations from the
 * moment it exists. The cone is immutable afterwards and safe to share across
 * threads.
 */

#include <algorithm>
#include <vector>

#include "okounkov/polytope.hpp"

namespace okounkov {

/// Linear halfspace {x : <normal,x> >= 0}; the normal is primitive.
struct Halfspace {
    ZVec normal;

    bool operator==(const Halfspace& o) const { return normal == o.normal; }
};

struct ConvexCone {
    int dim = 0;
    std::vector<ZVec> rays;       // extreme rays of the pointed part, primitive, lex-sorted
    std::vector<ZVec> lineality;  // empty in all semigroup-generated cones
    std::vector<Halfspace> facets;

    bool trivial() const { return rays.empty() && lineality.empty(); }
    bool operator==(const ConvexCone& o) const {
        return dim == o.dim && rays == o.rays && lineality == o.lineality;
    }
};

/// Canonical cone spanned by the given rays: non-extreme inputs are removed,
/// survivors reduced to primitive vectors, and the minimal H-representation
/// is attached and cross-validated against every input ray.
inline ConvexCone cone_hull(const std::vector<ZVec>& gens, int dim) {
    if (gens.empty()) throw empty_cone("cone_hull: no generators");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw dimension_mismatch("cone_hull: ray length mismatch");
        if (is_zero(g)) throw empty_cone("cone_hull: zero generator");
    }

    detail::DDResult polar = detail::dual_rays(gens, dim);
    std::vector<ZVec> normals = polar.rays;
    for (const auto& l : polar.lineality) {
        normals.push_back(l);
        ZVec neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        normals.push_back(std::move(neg));
    }
    std::sort(normals.begin(), normals.end(), lex_less<ZVec>);

    ConvexCone c;
    c.dim = dim;
    if (normals.empty()) {
        // polar is {0}: the cone is the whole space
        detail::DDResult full = detail::dual_rays({}, dim);
        c.lineality = std::move(full.lineality);
        return c;
    }
    detail::DDResult primal = detail::dual_rays(normals, dim);
    c.rays = std::move(primal.rays);
    c.lineality = std::move(primal.lineality);
    c.facets.reserve(normals.size());
    for (auto& n : normals) c.facets.push_back(Halfspace{std::move(n)});

    for (const auto& g : gens)
        for (const auto& h : c.facets)
            if (dot(h.normal, g) < 0)
                throw internal_error("cone_hull: generator escapes its own hull");
    return c;
}

/// Minimal H-representation (offset 0), cached on the cone at construction.
inline const std::vector<Halfspace>& halfspaces(const ConvexCone& c) {
    if (c.trivial()) throw empty_cone("halfspaces: trivial cone");
    return c.facets;
}

inline bool cone_contains(const ConvexCone& c, const ZVec& x) {
    for (const auto& h : c.facets)
        if (dot(h.normal, x) < 0) return false;
    return true;
}

inline bool cone_contains(const ConvexCone& c, const QVec& x) {
    for (const auto& h : c.facets)
        if (dot(h.normal, x) < 0) return false;
    return true;
}

/// The fiber {x in R^d : (x, a) in C} as a polytope. The substituted system
/// is homogenized over a t >= 0 chart and handed back to the kernel; vertices
/// are the t > 0 extreme rays. A nonempty fiber with a recession direction
/// cannot be represented and raises unbounded_fiber.
inline Polytope slice_cone(const ConvexCone& c, const QVec& a, int d) {
    int r = c.dim - d;
    if (r < 1 || static_cast<int>(a.size()) != r)
        throw dimension_mismatch("slice_cone: grading length mismatch");
    for (const auto& x : a)
        if (x < 0) throw negative_entry("slice_cone: negative direction entry");
    if (c.trivial()) return Polytope{d, {}};

    std::vector<ZVec> rows;
    rows.reserve(c.facets.size() + 1);
    for (const auto& h : c.facets) {
        Rat beta = 0;
        for (int j = 0; j < r; ++j)
            beta += Rat(h.normal[static_cast<std::size_t>(d + j)]) * a[static_cast<std::size_t>(j)];
        Int den = denominator(beta);
        ZVec row(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = h.normal[static_cast<std::size_t>(i)] * den;
        row[static_cast<std::size_t>(d)] = numerator(beta);
        rows.push_back(std::move(row));
    }
    ZVec tpos(static_cast<std::size_t>(d) + 1, Int(0));
    tpos[static_cast<std::size_t>(d)] = 1;
    rows.push_back(std::move(tpos));

    detail::DDResult lifted = detail::dual_rays(rows, d + 1);
    Polytope out;
    out.dim = d;
    bool recession = !lifted.lineality.empty();
    for (const auto& ray : lifted.rays) {
        Int t = ray.back();
        if (t == 0) {
            recession = true;
            continue;
        }
        QVec v(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = Rat(ray[static_cast<std::size_t>(i)], t);
        out.vertices.push_back(std::move(v));
    }
    if (out.vertices.empty()) return Polytope{d, {}};
    if (recession) throw unbounded_fiber("slice_cone: fiber has a recession direction");
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less<QVec>);
    return out;
}

}  // namespace okounkov
