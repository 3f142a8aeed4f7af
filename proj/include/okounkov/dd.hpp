#pragma once

/**
 * @file dd.hpp
 * @brief Double-description kernel: extreme rays of {x : A x >= 0}.
 *
 * One engine serves every conversion in the library: facet enumeration is
 * the same computation applied to the polar side, polytope hulls go through
 * homogenization, cone slicing through an affine lift.
 *
 * The pointed case follows Motzkin/Fukuda-Prodon: constraints are inserted
 * in lexicographic order; the initial cone comes from the first maximal
 * independent subset; adjacency of a positive/negative ray pair is decided
 * by the rank of their common tight set. Cones with lineality are split as
 * lineality-space plus a pointed image under the row-space substitution
 * x = B^T y, which is solved pointed and lifted back.
 */

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "okounkov/linalg.hpp"

namespace okounkov::detail {

struct DDResult {
    std::vector<ZVec> rays;       // extreme rays of the pointed part, primitive, lex-sorted
    std::vector<ZVec> lineality;  // primitive basis of the lineality space, lex-sorted
};

/// Extreme rays of {x in R^dim : c x >= 0 for all constraints c}, assuming the
/// cone is pointed (constraint rank = dim). Constraints must be deduplicated,
/// primitive, nonzero and lex-sorted.
inline std::vector<ZVec> pointed_dual_rays(const std::vector<ZVec>& cons, int dim) {
    struct Ray {
        ZVec v;
        std::vector<std::uint32_t> tight;  // indices into cons, ascending
    };

    // initial simplicial cone from the first independent constraint subset
    SpanTracker span(dim);
    std::vector<std::uint32_t> basis;
    std::vector<bool> consumed(cons.size(), false);
    for (std::uint32_t i = 0; i < cons.size() && span.rank() < dim; ++i)
        if (span.try_add(cons[i])) {
            basis.push_back(i);
            consumed[i] = true;
        }
    if (span.rank() != dim)
        throw internal_error("pointed_dual_rays: constraint rank below dimension");

    std::vector<QVec> m;
    m.reserve(basis.size());
    for (auto i : basis) m.push_back(to_qvec(cons[i]));
    std::vector<Ray> rays;
    for (int j = 0; j < dim; ++j) {
        QVec e(static_cast<std::size_t>(dim), Rat(0));
        e[static_cast<std::size_t>(j)] = 1;
        auto x = solve_linear(m, e);
        if (!x) throw internal_error("pointed_dual_rays: singular initial basis");
        Ray r;
        r.v = primitive_of(*x);
        for (int k = 0; k < dim; ++k)
            if (k != j) r.tight.push_back(basis[static_cast<std::size_t>(k)]);
        std::sort(r.tight.begin(), r.tight.end());
        rays.push_back(std::move(r));
    }

    // tight lists stay ascending; basis indices need not precede the rest, so
    // insertion must be positional rather than push_back
    auto add_tight = [](std::vector<std::uint32_t>& t, std::uint32_t ci) {
        t.insert(std::upper_bound(t.begin(), t.end(), ci), ci);
    };

    // rank test on the common tight set; rank can never exceed dim-2 for two
    // distinct extreme rays, so reaching dim-2 decides adjacency
    auto adjacent = [&](const Ray& a, const Ray& b) {
        int need = dim - 2;
        if (need <= 0) return true;
        std::vector<std::uint32_t> z;
        std::set_intersection(a.tight.begin(), a.tight.end(), b.tight.begin(), b.tight.end(),
                              std::back_inserter(z));
        if (static_cast<int>(z.size()) < need) return false;
        SpanTracker st(dim);
        for (auto i : z)
            if (st.try_add(cons[i]) && st.rank() == need) return true;
        return false;
    };

    for (std::uint32_t ci = 0; ci < cons.size(); ++ci) {
        if (consumed[ci]) continue;
        const ZVec& c = cons[ci];
        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(c, rays[i].v);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) add_tight(rays[i].tight, ci);
            continue;
        }
        std::vector<Ray> born;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0 || !adjacent(rays[p], rays[q])) continue;
                Ray nr;
                nr.v.resize(static_cast<std::size_t>(dim));
                for (int k = 0; k < dim; ++k)
                    nr.v[static_cast<std::size_t>(k)] =
                        val[p] * rays[q].v[static_cast<std::size_t>(k)] -
                        val[q] * rays[p].v[static_cast<std::size_t>(k)];
                nr.v = primitive(std::move(nr.v));
                std::set_intersection(rays[p].tight.begin(), rays[p].tight.end(),
                                      rays[q].tight.begin(), rays[q].tight.end(),
                                      std::back_inserter(nr.tight));
                add_tight(nr.tight, ci);
                born.push_back(std::move(nr));
            }
        }
        std::vector<Ray> next;
        next.reserve(rays.size() + born.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            if (val[i] == 0) add_tight(rays[i].tight, ci);
            next.push_back(std::move(rays[i]));
        }
        for (auto& r : born) next.push_back(std::move(r));
        rays = std::move(next);
    }

    std::vector<ZVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), lex_less<ZVec>);
    return out;
}

/// Canonicalizes a constraint system: primitive nonzero rows, deduplicated,
/// lex-sorted. The insertion order of the double description run is exactly
/// this order, which pins down every intermediate cone.
inline std::vector<ZVec> canonical_constraints(const std::vector<ZVec>& raw) {
    std::set<ZVec> seen;
    for (const auto& c : raw) {
        ZVec p = primitive(c);
        if (!is_zero(p)) seen.insert(std::move(p));
    }
    return {seen.begin(), seen.end()};
}

/// Full double description: extreme rays and lineality of {x : A x >= 0}.
inline DDResult dual_rays(const std::vector<ZVec>& constraints, int dim) {
    if (dim <= 0) throw dimension_mismatch("dual_rays: dimension must be positive");
    for (const auto& c : constraints)
        if (static_cast<int>(c.size()) != dim)
            throw dimension_mismatch("dual_rays: constraint length mismatch");

    DDResult out;
    std::vector<ZVec> cons = canonical_constraints(constraints);
    if (cons.empty()) {  // whole space
        for (int i = 0; i < dim; ++i) {
            ZVec e(static_cast<std::size_t>(dim), Int(0));
            e[static_cast<std::size_t>(i)] = 1;
            out.lineality.push_back(std::move(e));
        }
        return out;
    }

    out.lineality = kernel_basis(cons, dim);
    if (out.lineality.empty()) {
        out.rays = pointed_dual_rays(cons, dim);
        return out;
    }

    // substitute x = B^T y over the row space; the image system is pointed
    std::vector<ZVec> b = rowspace_basis(cons);
    int q = static_cast<int>(b.size());
    std::vector<ZVec> mapped;
    mapped.reserve(cons.size());
    for (const auto& c : cons) {
        ZVec row(static_cast<std::size_t>(q));
        for (int k = 0; k < q; ++k) row[static_cast<std::size_t>(k)] = dot(b[static_cast<std::size_t>(k)], c);
        mapped.push_back(std::move(row));
    }
    mapped = canonical_constraints(mapped);
    std::vector<ZVec> yrays = pointed_dual_rays(mapped, q);
    for (const auto& y : yrays) {
        ZVec x(static_cast<std::size_t>(dim), Int(0));
        for (int k = 0; k < q; ++k)
            for (int j = 0; j < dim; ++j)
                x[static_cast<std::size_t>(j)] +=
                    y[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        out.rays.push_back(primitive(std::move(x)));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less<ZVec>);
    return out;
}

}  // namespace okounkov::detail
