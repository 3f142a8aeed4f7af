#pragma once

/**
 * @file models.hpp
 * @brief Semigroup constructors: toric models with closed-form fiber oracles,
 *        the JSON serialization used by the CLI, and seeded random models for
 *        property tests.
 *
 * JSON schema (bit-exact, sorted keys, no floating point):
 *   {"bound": B, "d": d, "mode": "generators",
 *    "generators": [{"m": [..], "v": [..]}, ...], "r": r}
 *   {"bound": B, "d": d, "mode": "toric",
 *    "polytopes": [[[x,y],..], ...], "r": r}
 */

#include <nlohmann/json.hpp>

#include <string>

#include "okounkov/semigroup.hpp"

namespace okounkov {

/// Complete-mode semigroup: piece(m) = (m_1 P_1 + ... + m_r P_r) cap Z^d.
inline GradedSemigroup toric_model(std::vector<LatticePolytope> polytopes, long long bound) {
    return GradedSemigroup::toric(std::move(polytopes), bound);
}

/// Independent expected fiber for toric models: the weighted Minkowski sum of
/// the defining polytopes, computed without touching any semigroup or cone
/// code path.
inline Polytope toric_fiber_oracle(const std::vector<LatticePolytope>& polytopes, const QVec& a) {
    if (polytopes.empty()) throw empty_input("toric_fiber_oracle: no polytopes");
    check_direction(a, static_cast<int>(polytopes.size()));
    std::vector<Polytope> summands;
    summands.reserve(polytopes.size());
    for (const auto& lp : polytopes) summands.push_back(to_polytope(lp));
    std::vector<Rat> weights(a.begin(), a.end());
    return minkowski_weighted(summands, weights);
}

namespace detail {

inline long long json_int(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw parse_error("model: field '" + field + "' must be an integer");
    return j.get<long long>();
}

inline std::vector<long long> json_int_vector(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw parse_error("model: field '" + field + "' must be an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(json_int(x, field));
    return out;
}

}  // namespace detail

/// Parses the model JSON document. Diagnostics name the offending field; the
/// semigroup constructors add their own domain validation on top.
inline GradedSemigroup parse_model(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("model: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("model: top level must be an object");
    for (const char* field : {"mode", "d", "r", "bound"})
        if (!doc.contains(field)) throw parse_error(std::string("model: missing field '") + field + "'");
    if (!doc["mode"].is_string()) throw parse_error("model: field 'mode' must be a string");
    std::string mode = doc["mode"].get<std::string>();
    long long d = detail::json_int(doc["d"], "d");
    long long r = detail::json_int(doc["r"], "r");
    long long bound = detail::json_int(doc["bound"], "bound");

    if (mode == "generators") {
        if (!doc.contains("generators"))
            throw parse_error("model: generators mode requires field 'generators'");
        if (!doc["generators"].is_array()) throw parse_error("model: field 'generators' must be an array");
        std::vector<GradedPoint> gens;
        for (const auto& g : doc["generators"]) {
            if (!g.is_object() || !g.contains("v") || !g.contains("m"))
                throw parse_error("model: each generator needs fields 'v' and 'm'");
            GradedPoint pt;
            pt.v = detail::json_int_vector(g["v"], "v");
            pt.m = detail::json_int_vector(g["m"], "m");
            gens.push_back(std::move(pt));
        }
        return GradedSemigroup::from_generators(static_cast<int>(d), static_cast<int>(r),
                                                std::move(gens), bound);
    }
    if (mode == "toric") {
        if (!doc.contains("polytopes"))
            throw parse_error("model: toric mode requires field 'polytopes'");
        if (!doc["polytopes"].is_array()) throw parse_error("model: field 'polytopes' must be an array");
        if (static_cast<long long>(doc["polytopes"].size()) != r)
            throw parse_error("model: toric mode needs exactly r polytopes");
        std::vector<LatticePolytope> polys;
        for (const auto& pj : doc["polytopes"]) {
            if (!pj.is_array()) throw parse_error("model: each polytope must be an array of vertices");
            std::vector<ZVec> pts;
            for (const auto& vj : pj) {
                std::vector<long long> coords = detail::json_int_vector(vj, "polytopes");
                ZVec z(coords.size());
                for (std::size_t i = 0; i < coords.size(); ++i) z[i] = coords[i];
                if (static_cast<long long>(z.size()) != d)
                    throw parse_error("model: polytope vertex length differs from d");
                pts.push_back(std::move(z));
            }
            if (pts.empty()) throw parse_error("model: empty polytope vertex list");
            polys.push_back(lattice_polytope(pts, static_cast<int>(d)));
        }
        return GradedSemigroup::toric(std::move(polys), bound);
    }
    throw parse_error("model: mode must be 'generators' or 'toric'");
}

/// Serializes to the schema above; parse(serialize(S)) == S for both modes.
inline std::string serialize_model(const GradedSemigroup& s) {
    nlohmann::json doc;
    doc["bound"] = s.bound();
    doc["d"] = s.d();
    doc["r"] = s.r();
    if (s.mode() == GradedSemigroup::Mode::generators) {
        doc["mode"] = "generators";
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : s.generators()) {
            nlohmann::json one;
            one["m"] = g.m;
            one["v"] = g.v;
            gens.push_back(std::move(one));
        }
        doc["generators"] = std::move(gens);
    } else {
        doc["mode"] = "toric";
        nlohmann::json polys = nlohmann::json::array();
        for (const auto& lp : s.polytopes()) {
            nlohmann::json verts = nlohmann::json::array();
            for (const auto& v : lp.vertices) {
                std::vector<long long> coords;
                coords.reserve(v.size());
                for (const auto& x : v) coords.push_back(static_cast<long long>(x));
                verts.push_back(coords);
            }
            polys.push_back(std::move(verts));
        }
        doc["polytopes"] = std::move(polys);
    }
    return doc.dump(2) + "\n";
}

/// splitmix64: the de-facto standard 64-bit mixer (Steele-Lea-Flood stream
/// increment 0x9E3779B97F4A7C15, finalizer constants 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB with shifts 30/27/31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0, ..., n} by modulo (bias is irrelevant at the
    /// single-digit ranges used here and keeps the stream trivially portable).
    long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n + 1)); }

private:
    std::uint64_t state_;
};

/// Deterministic generator-mode model: n_gens points with v uniform in
/// [0,v_max]^d and m uniform nonzero in [0,m_max]^r; duplicates removed. The
/// bound is max(12, largest generator degree) so every model materializes a
/// usable range.
inline GradedSemigroup random_model(int d, int r, int n_gens, long long v_max, long long m_max,
                                    std::uint64_t seed) {
    if (d < 1 || r < 1 || n_gens < 0 || v_max < 0 || m_max < 1)
        throw error("random_model: parameters out of range");
    SplitMix64 rng(seed);
    std::vector<GradedPoint> gens;
    for (int g = 0; g < n_gens; ++g) {
        GradedPoint pt;
        pt.v.resize(static_cast<std::size_t>(d));
        for (auto& x : pt.v) x = rng.below(v_max);
        pt.m.resize(static_cast<std::size_t>(r));
        bool nonzero = false;
        while (!nonzero) {
            for (auto& x : pt.m) {
                x = rng.below(m_max);
                if (x > 0) nonzero = true;
            }
        }
        gens.push_back(std::move(pt));
    }
    long long bound = 12;
    for (const auto& g : gens) bound = std::max(bound, total_degree(g.m));
    return GradedSemigroup::from_generators(d, r, std::move(gens), bound);
}

}  // namespace okounkov
