#pragma once

/**
 * @file fujita.hpp
 * @brief Truncation-approximation engine: simplex partitions with sampled
 *        oscillation control, the vertex search for the stabilization degree,
 *        Minkowski/root-inequality propagation from cell vertices to interior
 *        directions, and the end-to-end verification pipeline.
 *
 * All volume comparisons are exact rational arithmetic. Oscillation control
 * is sampled (cell vertices plus centroid), not certified: no modulus of
 * continuity is available, and reports say so.
 */

#include <set>

#include "okounkov/bodies.hpp"
#include "okounkov/parallel.hpp"
#include "okounkov/report.hpp"

namespace okounkov {

/// Sampled per-cell volume statistics: M = min over samples, spread =
/// max - min. finite is false when a sample direction had an empty fiber.
struct CellStats {
    Rat M = 0;
    Rat spread = 0;
    bool finite = true;
};

/// Partition of the direction simplex T = {a >= 0, sum a_i = 1} into
/// simplicial cells with vertices on the (1/N)-lattice.
struct SimplexPartition {
    int r = 0;
    long long N = 0;
    std::vector<std::vector<QVec>> cells;  // each cell: r vertices in T
    std::vector<CellStats> stats;          // filled by oscillation passes
};

namespace detail {

/// T is affinely the decreasing-order simplex D = {1 >= t_1 >= ... >= t_q >= 0},
/// q = r-1, via t_k = 1 - (a_1 + ... + a_k). Maps a scaled lattice point of
/// N·D back to a direction in T.
inline QVec order_point_to_direction(const ZVec& s, long long n, int r) {
    QVec t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = Rat(s[i], n);
    QVec a(static_cast<std::size_t>(r));
    a[0] = 1 - (r > 1 ? t[0] : Rat(0));
    for (int k = 1; k + 1 < r; ++k) a[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] - t[static_cast<std::size_t>(k)];
    if (r > 1) a[static_cast<std::size_t>(r - 1)] = t[static_cast<std::size_t>(r - 2)];
    return a;
}

inline bool decreasing_in_range(const ZVec& s, long long n) {
    Int prev = n;
    for (const auto& x : s) {
        if (x > prev || x < 0) return false;
        prev = x;
    }
    return true;
}

}  // namespace detail

/// Edgewise subdivision of T at resolution N: N^(r-1) cells, each the image
/// of a unit Freudenthal simplex c + {1 >= x_{s(1)} >= ... >= x_{s(q)} >= 0}
/// that fits inside the scaled order simplex. Deterministic cell order:
/// lexicographic in (c, s).
inline SimplexPartition simplex_grid(int r, long long n) {
    if (r < 1) throw dimension_mismatch("simplex_grid: r must be positive");
    if (n < 1) throw error("simplex_grid: resolution must be positive");
    SimplexPartition part;
    part.r = r;
    part.N = n;
    int q = r - 1;
    if (q == 0) {
        part.cells.push_back({QVec{Rat(1)}});
        return part;
    }
    std::vector<int> perm(static_cast<std::size_t>(q));
    std::vector<Int> offset(static_cast<std::size_t>(q), Int(0));
    while (true) {
        for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<ZVec> verts{ZVec(offset.begin(), offset.end())};
            for (int k = 0; k < q; ++k) {
                ZVec nxt = verts.back();
                nxt[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] += 1;
                verts.push_back(std::move(nxt));
            }
            bool ok = true;
            for (const auto& v : verts)
                if (!detail::decreasing_in_range(v, n)) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::vector<QVec> cell;
                cell.reserve(verts.size());
                for (const auto& v : verts) cell.push_back(detail::order_point_to_direction(v, n, r));
                part.cells.push_back(std::move(cell));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        int k = q - 1;
        while (k >= 0) {
            if (++offset[static_cast<std::size_t>(k)] < n) break;
            offset[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return part;
}

inline QVec cell_centroid(const std::vector<QVec>& cell) {
    if (cell.empty()) throw empty_input("cell_centroid: empty cell");
    QVec c(cell[0].size(), Rat(0));
    for (const auto& v : cell)
        for (std::size_t i = 0; i < v.size(); ++i) c[i] += v[i];
    for (auto& x : c) x /= static_cast<int>(cell.size());
    return c;
}

/// Samples the fiber volume at every cell vertex and the centroid. M is the
/// sample minimum, spread the sample range. A sample with an empty fiber
/// marks the cell not-finite (the caller treats the spread as infinite).
inline CellStats oscillation_estimate(const GradedSemigroup& s, const std::vector<QVec>& cell) {
    if (cell.empty()) throw empty_input("oscillation_estimate: empty cell");
    std::vector<QVec> samples = cell;
    samples.push_back(cell_centroid(cell));
    CellStats st;
    bool first = true;
    Rat max = 0;
    for (const auto& a : samples) {
        Polytope body = okounkov_body(s, a);
        if (body.empty()) {
            st.finite = false;
            return st;
        }
        Rat vol = factorial(s.d()) * polytope_volume(body);
        if (first) {
            st.M = vol;
            max = vol;
            first = false;
        } else {
            st.M = std::min(st.M, vol);
            max = std::max(max, vol);
        }
    }
    st.spread = max - st.M;
    return st;
}

/// Fills stats for every cell, in parallel. Cell results land in per-index
/// slots, so the outcome is independent of scheduling.
inline void fill_stats(const GradedSemigroup& s, SimplexPartition& part) {
    part.stats.assign(part.cells.size(), CellStats{});
    parallel_for(part.cells.size(), [&](std::size_t i) {
        part.stats[i] = oscillation_estimate(s, part.cells[i]);
    });
}

/// Smallest N on the doubling schedule 1,2,4,... whose grid has every cell
/// spread <= eps_prime (all samples finite). Throws resolution_exceeded past
/// N_max.
inline SimplexPartition refine_until(const GradedSemigroup& s, const Rat& eps_prime, long long n_max) {
    if (eps_prime <= 0) throw error("refine_until: epsilon_prime must be positive");
    for (long long n = 1; n <= n_max; n *= 2) {
        SimplexPartition part = simplex_grid(s.r(), n);
        fill_stats(s, part);
        bool ok = true;
        for (const auto& st : part.stats)
            if (!st.finite || st.spread > eps_prime) {
                ok = false;
                break;
            }
        if (ok) return part;
    }
    throw resolution_exceeded("refine_until: spread target not met by N_max");
}

/// Smallest p* in p_set such that every sampled p >= p* satisfies, at every
/// vertex a of every cell i, vol_trunc(p, a) >= M_i - eps_prime. The cell
/// minimum M_i (not the vertex's own volume) is the propagation target: it is
/// what the Minkowski step carries into the cell interior. nullopt: no such
/// p* among the sampled set.
inline std::optional<long long> vertex_p0(const GradedSemigroup& s, const SimplexPartition& part,
                                          const Rat& eps_prime, std::vector<long long> p_set) {
    if (part.stats.size() != part.cells.size())
        throw error("vertex_p0: partition has no oscillation stats");
    std::sort(p_set.begin(), p_set.end());
    p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
    if (p_set.empty()) return std::nullopt;

    // per-vertex threshold: the tightest M_i among the cells meeting it
    std::map<QVec, Rat> threshold;
    for (std::size_t i = 0; i < part.cells.size(); ++i) {
        if (!part.stats[i].finite) return std::nullopt;
        for (const auto& v : part.cells[i]) {
            auto it = threshold.find(v);
            if (it == threshold.end())
                threshold.emplace(v, part.stats[i].M);
            else
                it->second = std::min(it->second, part.stats[i].M);
        }
    }

    std::vector<std::pair<QVec, Rat>> targets(threshold.begin(), threshold.end());
    std::vector<char> pass(p_set.size(), 0);
    parallel_for(p_set.size(), [&](std::size_t pi) {
        GradedSemigroup trunc = s.truncate(p_set[pi]);
        bool ok = true;
        for (const auto& [a, m_i] : targets) {
            Rat vol = 0;
            try {
                vol = volume_geometric(trunc, a);
            } catch (const empty_cone&) {
                vol = 0;
            }
            if (vol < m_i - eps_prime) {
                ok = false;
                break;
            }
        }
        pass[pi] = ok ? 1 : 0;
    });
    // smallest p* with every sampled p >= p* passing
    std::optional<long long> found;
    for (std::size_t i = p_set.size(); i-- > 0;) {
        if (!pass[i]) break;
        found = p_set[i];
    }
    return found;
}

/// vol(truncate(S,p), a) / vol(S, a), exact in [0,1]. A truncation with no
/// points along a contributes 0.
inline Rat fujita_ratio(const GradedSemigroup& s, long long p, const QVec& a) {
    Rat full = volume_geometric(s, a);
    if (full == 0) throw zero_volume("fujita_ratio: direction outside the interior of the support");
    Rat trunc = 0;
    try {
        trunc = volume_geometric(s.truncate(p), a);
    } catch (const empty_cone&) {
        trunc = 0;
    }
    return trunc / full;
}

/// Exact barycentric coordinates of a in the cell, all >= 0; throws when a
/// lies outside.
inline QVec barycentric(const std::vector<QVec>& cell, const QVec& a) {
    if (cell.empty()) throw empty_input("barycentric: empty cell");
    std::size_t r = cell[0].size();
    if (a.size() != r) throw dimension_mismatch("barycentric: direction length mismatch");
    // rows: coordinates of the vertices (one linear equation per coordinate),
    // plus the affine row sum t_j = 1
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < r; ++i) {
        QVec row(cell.size());
        for (std::size_t j = 0; j < cell.size(); ++j) row[j] = cell[j][i];
        rows.push_back(std::move(row));
    }
    rows.push_back(QVec(cell.size(), Rat(1)));
    QVec rhs = a;
    rhs.push_back(Rat(1));
    auto t = solve_linear(rows, rhs);
    if (!t) throw barycentric_failure("barycentric: direction not in the cell's affine hull");
    for (const auto& x : *t)
        if (x < 0) throw barycentric_failure("barycentric: direction outside the cell");
    return *t;
}

/// The Minkowski propagation step at a single direction: the truncated fiber
/// over a contains the barycentric Minkowski combination of the truncated
/// vertex fibers (convexity of the cone), and its volume is at least the
/// minimum vertex volume (root inequality for weighted sums).
struct MinkowskiCheck {
    bool containment = false;
    bool volume_bound = false;
    Rat vol_at_a = 0;
    Rat min_vertex_vol = 0;
    std::vector<Rat> vertex_vols;
};

/// The truncated fiber, with an empty truncation degrading to the empty body.
inline Polytope body_or_empty(const GradedSemigroup& s, const QVec& a) {
    try {
        return okounkov_body(s, a);
    } catch (const empty_cone&) {
        return Polytope{s.d(), {}};
    }
}

inline MinkowskiCheck check_minkowski_bound(const GradedSemigroup& s, long long p,
                                            const std::vector<QVec>& cell, const QVec& a) {
    QVec t = barycentric(cell, a);
    GradedSemigroup trunc = s.truncate(p);
    MinkowskiCheck out;
    std::vector<Polytope> vertex_bodies;
    vertex_bodies.reserve(cell.size());
    for (const auto& v : cell) {
        Polytope body = body_or_empty(trunc, v);
        out.vertex_vols.push_back(factorial(s.d()) * polytope_volume(body));
        vertex_bodies.push_back(std::move(body));
    }
    out.min_vertex_vol = *std::min_element(out.vertex_vols.begin(), out.vertex_vols.end());
    Polytope at_a = body_or_empty(trunc, a);
    out.vol_at_a = factorial(s.d()) * polytope_volume(at_a);
    // a positively weighted empty vertex fiber collapses the combination to
    // the empty polytope, which is contained in anything
    Polytope combo = minkowski_weighted(vertex_bodies, t);
    out.containment = contains(at_a, combo);
    out.volume_bound = out.vol_at_a >= out.min_vertex_vol;
    return out;
}

namespace detail {

inline std::vector<long long> checked_p_set(std::vector<long long> p_set, long long bound) {
    std::sort(p_set.begin(), p_set.end());
    p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
    for (long long p : p_set) {
        if (p < 1) throw error("p_set entries must be positive");
        if (p > bound) throw beyond_bound("p_set entry beyond the materialization bound");
    }
    return p_set;
}

}  // namespace detail

/// Tabulates fujita ratios for every (p, direction) pair. Rows that fail with
/// a zero full volume or an out-of-bound degree are marked, never dropped,
/// and the sweep continues. Rows are sorted by (p, lex direction).
inline FujitaReport sweep(const GradedSemigroup& s, const std::vector<long long>& p_raw,
                          const std::vector<QVec>& directions) {
    std::vector<long long> p_set = detail::checked_p_set(p_raw, s.bound());
    for (const auto& a : directions) check_direction(a, s.r());
    FujitaReport report;
    report.bound = s.bound();
    report.rows.resize(p_set.size() * directions.size());
    // materialize truncations serially first: they memoize onto s
    for (long long p : p_set) s.truncate(p);
    parallel_for(report.rows.size(), [&](std::size_t idx) {
        std::size_t pi = idx / directions.size();
        std::size_t ai = idx % directions.size();
        FujitaRow row;
        row.p = p_set[pi];
        row.direction = directions[ai];
        try {
            row.vol_full = volume_geometric(s, row.direction);
            try {
                row.vol_trunc = volume_geometric(s.truncate(row.p), row.direction);
            } catch (const empty_cone&) {
                row.vol_trunc = 0;
            }
            if (row.vol_full == 0) throw zero_volume("sweep: zero full volume");
            row.ratio = row.vol_trunc / row.vol_full;
        } catch (const zero_volume&) {
            row.marker = RowMarker::zero_volume;
        } catch (const beyond_bound&) {
            row.marker = RowMarker::beyond_bound;
        }
        report.rows[idx] = std::move(row);
    });
    std::sort(report.rows.begin(), report.rows.end(), [](const FujitaRow& x, const FujitaRow& y) {
        if (x.p != y.p) return x.p < y.p;
        return lex_less(x.direction, y.direction);
    });
    return report;
}

/// End-to-end verification pipeline:
///   1. eps' = eps · (min sampled volume on the initial grid) / 2;
///   2. refine the partition until every sampled cell spread is <= eps'
///      (best effort: if N_max is hit, the finest grid is used and
///      oscillation_met records the miss);
///   3. find the stabilization degree p0 over the partition vertices;
///   4. for every cell direction (vertices and centroid) and every sampled
///      p >= p0, assert |1 - ratio| < eps and run the Minkowski propagation
///      check. verdict = all assertions hold.
inline FujitaReport verify_theorem(const GradedSemigroup& s, const Rat& epsilon, long long n_max,
                                   const std::vector<long long>& p_raw) {
    if (epsilon <= 0) throw error("verify_theorem: epsilon must be positive");
    std::vector<long long> p_set = detail::checked_p_set(p_raw, s.bound());
    if (p_set.empty()) throw empty_input("verify_theorem: empty p_set");

    FujitaReport report;
    report.bound = s.bound();
    report.epsilon = epsilon;

    // step 1: initial coarse grid fixes eps'
    SimplexPartition initial = simplex_grid(s.r(), 1);
    Rat min_vol;
    bool first = true;
    for (const auto& cell : initial.cells) {
        std::vector<QVec> samples = cell;
        samples.push_back(cell_centroid(cell));
        for (const auto& a : samples) {
            Rat vol = volume_geometric(s, a);
            if (vol == 0)
                throw zero_volume("verify_theorem: zero volume at an initial grid direction");
            min_vol = first ? vol : std::min(min_vol, vol);
            first = false;
        }
    }
    Rat eps_prime = epsilon * min_vol / 2;
    report.epsilon_prime = eps_prime;

    // step 2: refinement, best effort within N_max
    SimplexPartition part;
    try {
        part = refine_until(s, eps_prime, n_max);
        report.oscillation_met = true;
    } catch (const resolution_exceeded&) {
        long long finest = 1;
        while (finest * 2 <= n_max) finest *= 2;
        part = simplex_grid(s.r(), finest);
        fill_stats(s, part);
        report.oscillation_met = false;
    }
    report.resolution = part.N;

    // step 3: stabilization degree over the partition vertices
    report.p0 = vertex_p0(s, part, eps_prime, p_set);

    // step 4: ratio and propagation checks over vertices and centroids
    std::vector<long long> active_p;
    if (report.p0)
        for (long long p : p_set)
            if (p >= *report.p0) active_p.push_back(p);

    bool ratios_ok = report.p0.has_value();
    report.minkowski_ok = true;
    std::set<std::pair<long long, QVec>> emitted;
    struct Task {
        long long p;
        std::size_t cell;
        QVec a;
    };
    std::vector<Task> tasks;
    for (long long p : active_p)
        for (std::size_t ci = 0; ci < part.cells.size(); ++ci) {
            for (const auto& v : part.cells[ci]) tasks.push_back({p, ci, v});
            tasks.push_back({p, ci, cell_centroid(part.cells[ci])});
        }
    std::vector<FujitaRow> rows(tasks.size());
    std::vector<char> ratio_pass(tasks.size(), 1), mink_pass(tasks.size(), 1);
    parallel_for(tasks.size(), [&](std::size_t i) {
        const Task& task = tasks[i];
        FujitaRow row;
        row.p = task.p;
        row.direction = task.a;
        row.vol_full = volume_geometric(s, task.a);
        try {
            row.vol_trunc = volume_geometric(s.truncate(task.p), task.a);
        } catch (const empty_cone&) {
            row.vol_trunc = 0;
        }
        row.ratio = row.vol_full == 0 ? Rat(0) : row.vol_trunc / row.vol_full;
        if (row.vol_full == 0 || abs(1 - row.ratio) >= epsilon) ratio_pass[i] = 0;
        MinkowskiCheck mc = check_minkowski_bound(s, task.p, part.cells[task.cell], task.a);
        if (!mc.containment || !mc.volume_bound) mink_pass[i] = 0;
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!ratio_pass[i]) ratios_ok = false;
        if (!mink_pass[i]) report.minkowski_ok = false;
        auto key = std::make_pair(rows[i].p, rows[i].direction);
        if (emitted.insert(key).second) report.rows.push_back(rows[i]);
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const FujitaRow& x, const FujitaRow& y) {
        if (x.p != y.p) return x.p < y.p;
        return lex_less(x.direction, y.direction);
    });
    report.verdict = ratios_ok && report.minkowski_ok;
    return report;
}

}  // namespace okounkov
