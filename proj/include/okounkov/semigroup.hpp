#pragma once

/**
 * @file semigroup.hpp
 * @brief Multigraded valuation semigroups: graded pieces, ray restriction,
 *        degree-p truncation.
 *
 * A semigroup is immutable after construction. Generator mode materializes
 * every piece up to the bound eagerly (dynamic programming in increasing
 * total degree); complete/toric mode enumerates lattice points of weighted
 * Minkowski sums on demand and memoizes. Queries beyond the bound raise
 * beyond_bound rather than approximating. Truncations and the global cone
 * are memoized compute-then-publish, so concurrent readers are safe.
 */

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "okounkov/cone.hpp"

namespace okounkov {

/// Grading index in N^r.
using MultiDegree = std::vector<long long>;
/// Valuation image in N^d.
using ValuationVector = std::vector<long long>;

inline long long total_degree(const MultiDegree& m) {
    return std::accumulate(m.begin(), m.end(), 0LL);
}

struct GradedPoint {
    ValuationVector v;
    MultiDegree m;

    bool operator==(const GradedPoint& o) const { return v == o.v && m == o.m; }
    bool operator<(const GradedPoint& o) const { return m != o.m ? m < o.m : v < o.v; }
};

/// Validates a direction vector in Q^r_{>=0}, not identically zero.
inline void check_direction(const QVec& a, int r) {
    if (static_cast<int>(a.size()) != r) throw dimension_mismatch("direction: length mismatch");
    bool nonzero = false;
    for (const auto& x : a) {
        if (x < 0) throw negative_entry("direction: negative entry");
        if (x != 0) nonzero = true;
    }
    if (!nonzero) throw empty_ray("direction: zero vector");
}

/// Scales a direction onto the simplex T (entries summing to 1).
inline QVec normalize_direction(const QVec& a) {
    Rat s = 0;
    for (const auto& x : a) s += x;
    QVec out = a;
    for (auto& x : out) x /= s;
    return out;
}

struct SupportInfo {
    std::vector<MultiDegree> degrees;  // nonzero degrees with nonempty piece, sorted
    std::vector<QVec> directions;      // normalized m/|m|, deduplicated, sorted
};

class GradedSemigroup {
public:
    enum class Mode { generators, toric };

    static GradedSemigroup from_generators(int d, int r, std::vector<GradedPoint> gens, long long bound) {
        if (d < 1 || r < 1) throw dimension_mismatch("from_generators: need d >= 1 and r >= 1");
        long long max_total = 0;
        for (const auto& g : gens) {
            if (static_cast<int>(g.v.size()) != d || static_cast<int>(g.m.size()) != r)
                throw dimension_mismatch("from_generators: generator shape mismatch");
            for (auto x : g.v)
                if (x < 0) throw negative_entry("from_generators: negative valuation entry");
            long long t = 0;
            for (auto x : g.m) {
                if (x < 0) throw negative_entry("from_generators: negative degree entry");
                t += x;
            }
            if (t == 0) throw zero_degree_generator("from_generators: generator of degree zero");
            max_total = std::max(max_total, t);
        }
        if (bound < max_total)
            throw bound_too_small("from_generators: bound below the largest generator degree");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        auto impl = std::make_shared<Impl>();
        impl->d = d;
        impl->r = r;
        impl->bound = bound;
        impl->mode = Mode::generators;
        impl->generators = std::move(gens);
        dp_fill(*impl);
        return GradedSemigroup(std::move(impl));
    }

    static GradedSemigroup toric(std::vector<LatticePolytope> polys, long long bound) {
        if (polys.empty()) throw empty_input("toric: no polytopes");
        int d = polys[0].dim;
        if (d < 1) throw dimension_mismatch("toric: dimension must be positive");
        if (bound < 1) throw bound_too_small("toric: bound must be at least 1");
        for (const auto& lp : polys) {
            if (lp.dim != d) throw dimension_mismatch("toric: polytope dimensions differ");
            if (lp.vertices.empty()) throw empty_polytope("toric: empty polytope");
            for (const auto& v : lp.vertices)
                for (const auto& x : v)
                    if (x < 0) throw negative_entry("toric: negative vertex entry");
            std::vector<QVec> diffs;
            for (std::size_t i = 1; i < lp.vertices.size(); ++i) {
                QVec diff(static_cast<std::size_t>(d));
                for (int j = 0; j < d; ++j)
                    diff[static_cast<std::size_t>(j)] =
                        Rat(lp.vertices[i][static_cast<std::size_t>(j)] - lp.vertices[0][static_cast<std::size_t>(j)]);
                diffs.push_back(std::move(diff));
            }
            if (rank_of(diffs) < d)
                throw not_full_dimensional("toric: polytope is not full-dimensional");
        }
        auto impl = std::make_shared<Impl>();
        impl->d = d;
        impl->r = static_cast<int>(polys.size());
        impl->bound = bound;
        impl->mode = Mode::toric;
        impl->polytopes = std::move(polys);
        impl->pieces[MultiDegree(static_cast<std::size_t>(impl->r), 0)] = {
            ValuationVector(static_cast<std::size_t>(d), 0)};
        return GradedSemigroup(std::move(impl));
    }

    int d() const { return impl_->d; }
    int r() const { return impl_->r; }
    long long bound() const { return impl_->bound; }
    Mode mode() const { return impl_->mode; }
    const std::vector<GradedPoint>& generators() const { return impl_->generators; }
    const std::vector<LatticePolytope>& polytopes() const { return impl_->polytopes; }

    bool operator==(const GradedSemigroup& o) const {
        return impl_->d == o.impl_->d && impl_->r == o.impl_->r && impl_->bound == o.impl_->bound &&
               impl_->mode == o.impl_->mode && impl_->generators == o.impl_->generators &&
               impl_->polytopes == o.impl_->polytopes;
    }

    /// The exact graded piece, sorted. Empty pieces come back as an empty set.
    const std::vector<ValuationVector>& piece(const MultiDegree& m) const {
        if (static_cast<int>(m.size()) != impl_->r) throw dimension_mismatch("piece: degree length mismatch");
        long long t = 0;
        for (auto x : m) {
            if (x < 0) throw negative_entry("piece: negative degree entry");
            t += x;
        }
        if (t > impl_->bound) throw beyond_bound("piece: degree beyond the materialization bound");
        if (impl_->mode == Mode::generators) {
            auto it = impl_->pieces.find(m);
            return it == impl_->pieces.end() ? empty_piece() : it->second;
        }
        {
            std::lock_guard<std::mutex> lock(impl_->mu);
            auto it = impl_->pieces.find(m);
            if (it != impl_->pieces.end()) return it->second;
        }
        std::vector<ValuationVector> pts = toric_piece(m);
        std::lock_guard<std::mutex> lock(impl_->mu);
        return impl_->pieces.emplace(m, std::move(pts)).first->second;
    }

    long long hilbert(const MultiDegree& m) const { return static_cast<long long>(piece(m).size()); }

    /// The degree-k piece of the restricted series along a: piece(k·a) when
    /// k·a is an integer vector, empty otherwise.
    const std::vector<ValuationVector>& restrict_ray(const QVec& a, long long k) const {
        check_direction(a, impl_->r);
        if (k < 1) throw error("restrict_ray: k must be positive");
        MultiDegree m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rat s = Rat(k) * a[i];
            if (!is_integral(s)) return empty_piece();
            m[i] = static_cast<long long>(numerator(s));
        }
        return piece(m);
    }

    /// The degree-p generated subseries: all pieces of total degree exactly p
    /// become generators, rebuilt to the same bound. Memoized per p.
    GradedSemigroup truncate(long long p) const {
        if (p < 1) throw error("truncate: p must be positive");
        if (p > impl_->bound) throw beyond_bound("truncate: p beyond the materialization bound");
        {
            std::lock_guard<std::mutex> lock(impl_->mu);
            auto it = impl_->truncations.find(p);
            if (it != impl_->truncations.end()) return GradedSemigroup(it->second->impl_);
        }
        std::vector<GradedPoint> gens;
        MultiDegree m(static_cast<std::size_t>(impl_->r), 0);
        collect_degree_p(p, 0, p, m, gens);
        auto impl = std::make_shared<Impl>();
        impl->d = impl_->d;
        impl->r = impl_->r;
        impl->bound = impl_->bound;
        impl->mode = Mode::generators;
        std::sort(gens.begin(), gens.end());
        impl->generators = std::move(gens);
        dp_fill(*impl);
        auto trunc = std::make_shared<GradedSemigroup>(GradedSemigroup(std::move(impl)));
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->truncations.emplace(p, std::move(trunc)).first;
        return GradedSemigroup(it->second->impl_);
    }

    /// Degree-kp piece of the singly graded series generated by the ray
    /// restriction at degree p: the k-fold sumset.
    std::vector<ValuationVector> truncate_ray_piece(const QVec& a, long long p, long long k) const {
        check_direction(a, impl_->r);
        if (p < 1 || k < 0) throw error("truncate_ray_piece: need p >= 1 and k >= 0");
        MultiDegree pa(a.size());
        Rat pa_total = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rat s = Rat(p) * a[i];
            if (!is_integral(s)) throw non_integral_direction("truncate_ray_piece: p·a is not integral");
            pa[i] = static_cast<long long>(numerator(s));
            pa_total += s;
        }
        if (Rat(k) * pa_total > impl_->bound)
            throw beyond_bound("truncate_ray_piece: k·p·|a| beyond the materialization bound");
        std::vector<ValuationVector> acc{ValuationVector(static_cast<std::size_t>(impl_->d), 0)};
        const auto& base = piece(pa);
        for (long long i = 0; i < k; ++i) acc = sumset(acc, base);
        return acc;
    }

    /// Nonzero degrees with nonempty pieces up to the given total degree,
    /// plus their normalized directions.
    SupportInfo support(long long up_to) const {
        if (up_to > impl_->bound) throw beyond_bound("support: bound beyond materialization");
        SupportInfo info;
        MultiDegree m(static_cast<std::size_t>(impl_->r), 0);
        for (long long t = 1; t <= up_to; ++t) collect_support(t, 0, t, m, info.degrees);
        std::set<QVec> dirs;
        for (const auto& deg : info.degrees) {
            QVec dir(deg.size());
            Rat tot = Rat(total_degree(deg));
            for (std::size_t i = 0; i < deg.size(); ++i) dir[i] = Rat(deg[i]) / tot;
            dirs.insert(std::move(dir));
        }
        info.directions.assign(dirs.begin(), dirs.end());
        return info;
    }

    /// All materialized points (v,m) with m != 0, as vectors in Z^(d+r).
    std::vector<ZVec> graded_points(long long up_to) const {
        if (up_to > impl_->bound) throw beyond_bound("graded_points: bound beyond materialization");
        std::vector<ZVec> pts;
        SupportInfo info = support(up_to);
        for (const auto& m : info.degrees) {
            for (const auto& v : piece(m)) {
                ZVec x;
                x.reserve(v.size() + m.size());
                for (auto c : v) x.push_back(Int(c));
                for (auto c : m) x.push_back(Int(c));
                pts.push_back(std::move(x));
            }
        }
        return pts;
    }

    bool has_nonzero_piece() const {
        if (impl_->mode == Mode::toric) return true;  // full-dimensional summands
        return !impl_->generators.empty();
    }

    /// Memo slot for the global cone; build runs outside the lock and the
    /// first published result wins (duplicate computation is acceptable).
    const ConvexCone& cached_cone(const std::function<ConvexCone()>& build) const {
        {
            std::lock_guard<std::mutex> lock(impl_->mu);
            if (impl_->cone) return *impl_->cone;
        }
        auto fresh = std::make_shared<const ConvexCone>(build());
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (!impl_->cone) impl_->cone = std::move(fresh);
        return *impl_->cone;
    }

    static std::vector<ValuationVector> sumset(const std::vector<ValuationVector>& a,
                                               const std::vector<ValuationVector>& b) {
        std::vector<ValuationVector> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a)
            for (const auto& y : b) {
                ValuationVector s(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
                out.push_back(std::move(s));
            }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    struct Impl {
        int d = 0, r = 0;
        long long bound = 0;
        Mode mode = Mode::generators;
        std::vector<GradedPoint> generators;
        std::vector<LatticePolytope> polytopes;
        std::map<MultiDegree, std::vector<ValuationVector>> pieces;  // nonempty pieces (plus degree 0)
        mutable std::mutex mu;
        mutable std::map<long long, std::shared_ptr<GradedSemigroup>> truncations;
        mutable std::shared_ptr<const ConvexCone> cone;
    };

    explicit GradedSemigroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    static const std::vector<ValuationVector>& empty_piece() {
        static const std::vector<ValuationVector> none;
        return none;
    }

    /// Eager dynamic programming over increasing total degree:
    /// piece(m) = union over generators g <= m of (piece(m - m_g) + v_g).
    static void dp_fill(Impl& impl) {
        impl.pieces.clear();
        impl.pieces[MultiDegree(static_cast<std::size_t>(impl.r), 0)] = {
            ValuationVector(static_cast<std::size_t>(impl.d), 0)};
        std::vector<MultiDegree> layer;
        MultiDegree m(static_cast<std::size_t>(impl.r), 0);
        for (long long t = 1; t <= impl.bound; ++t) {
            layer.clear();
            enumerate_degrees(t, 0, t, m, layer);
            for (const auto& deg : layer) {
                std::vector<ValuationVector> acc;
                for (const auto& g : impl.generators) {
                    MultiDegree rest(deg.size());
                    bool fits = true;
                    for (std::size_t i = 0; i < deg.size(); ++i) {
                        rest[i] = deg[i] - g.m[i];
                        if (rest[i] < 0) {
                            fits = false;
                            break;
                        }
                    }
                    if (!fits) continue;
                    auto it = impl.pieces.find(rest);
                    if (it == impl.pieces.end()) continue;
                    for (const auto& w : it->second) {
                        ValuationVector s(w.size());
                        for (std::size_t i = 0; i < w.size(); ++i) s[i] = w[i] + g.v[i];
                        acc.push_back(std::move(s));
                    }
                }
                if (acc.empty()) continue;
                std::sort(acc.begin(), acc.end());
                acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                impl.pieces.emplace(deg, std::move(acc));
            }
        }
    }

    static void enumerate_degrees(long long total, std::size_t pos, long long left, MultiDegree& m,
                                  std::vector<MultiDegree>& out) {
        (void)total;
        if (pos + 1 == m.size()) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            m[pos] = v;
            enumerate_degrees(total, pos + 1, left - v, m, out);
        }
    }

    void collect_degree_p(long long p, std::size_t pos, long long left, MultiDegree& m,
                          std::vector<GradedPoint>& out) const {
        (void)p;
        if (pos + 1 == m.size()) {
            m[pos] = left;
            for (const auto& v : piece(m)) out.push_back(GradedPoint{v, m});
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            m[pos] = v;
            collect_degree_p(p, pos + 1, left - v, m, out);
        }
    }

    void collect_support(long long total, std::size_t pos, long long left, MultiDegree& m,
                         std::vector<MultiDegree>& out) const {
        if (pos + 1 == m.size()) {
            m[pos] = left;
            if (!piece(m).empty()) out.push_back(m);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            m[pos] = v;
            collect_support(total, pos + 1, left - v, m, out);
        }
    }

    std::vector<ValuationVector> toric_piece(const MultiDegree& m) const {
        std::vector<Polytope> summands;
        std::vector<Rat> weights;
        summands.reserve(impl_->polytopes.size());
        weights.reserve(impl_->polytopes.size());
        for (std::size_t j = 0; j < impl_->polytopes.size(); ++j) {
            summands.push_back(to_polytope(impl_->polytopes[j]));
            weights.push_back(Rat(m[j]));
        }
        Polytope sum = minkowski_weighted(summands, weights);
        std::vector<ValuationVector> out;
        for (const auto& z : lattice_points(sum)) {
            ValuationVector v(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) v[i] = static_cast<long long>(z[i]);
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::shared_ptr<Impl> impl_;
};

}  // namespace okounkov
