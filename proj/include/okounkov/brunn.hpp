#pragma once

/**
 * @file brunn.hpp
 * @brief Exact sign classification for the Brunn-Minkowski margin.
 *
 * Classifies vol(P+Q)^(1/n) - vol(P)^(1/n) - vol(Q)^(1/n). Dimensions 1 and 2
 * reduce to rational comparisons by squaring. Higher dimensions first try the
 * exact homothety route (equality of convex bodies forces vol(Q)/vol(P) to be
 * a perfect rational n-th power, after which everything is rational again) and
 * otherwise certify the sign with directed-rounding integer root intervals at
 * escalating precision.
 */

#include "okounkov/polytope.hpp"

namespace okounkov {

enum class BMResult { StrictlyGreater, Equal, Violation, Indeterminate };

inline const char* to_string(BMResult r) {
    switch (r) {
        case BMResult::StrictlyGreater: return "StrictlyGreater";
        case BMResult::Equal: return "Equal";
        case BMResult::Violation: return "Violation";
        default: return "Indeterminate";
    }
}

namespace detail {

/// Certified bounds on x^(1/n) at scale 2^bits: lower <= x^(1/n)·2^bits < upper.
struct RootInterval {
    Int lower, upper;
};

inline RootInterval root_interval(const Rat& x, unsigned n, unsigned bits) {
    Int scaled = (numerator(x) << (n * bits)) / denominator(x);  // floor
    RootInterval iv;
    iv.lower = iroot(scaled, n);
    Int up = scaled;
    if (up * denominator(x) != (numerator(x) << (n * bits))) ++up;  // ceil
    iv.upper = iroot(up, n) + 1;
    return iv;
}

}  // namespace detail

/// Sign of vol(P+Q)^(1/n) - vol(P)^(1/n) - vol(Q)^(1/n) on nonempty inputs.
/// Never returns Violation on genuine convex bodies; Indeterminate only if an
/// irrational strict margin survives the precision cap (2^14 fractional bits).
inline BMResult brunn_minkowski_margin(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw dimension_mismatch("brunn_minkowski_margin: ambient dimensions differ");
    if (p.empty() || q.empty()) throw empty_polytope("brunn_minkowski_margin: empty summand");
    unsigned n = static_cast<unsigned>(p.dim);
    Rat a = polytope_volume(minkowski_weighted({p, q}, {Rat(1), Rat(1)}));
    Rat b = polytope_volume(p);
    Rat c = polytope_volume(q);

    if (n == 1) {
        Rat s = a - b - c;
        if (s == 0) return BMResult::Equal;
        return s > 0 ? BMResult::StrictlyGreater : BMResult::Violation;
    }
    if (n == 2) {
        Rat s = a - b - c;
        if (s < 0) return BMResult::Violation;
        Rat delta = s * s - 4 * b * c;
        if (delta == 0) return BMResult::Equal;
        return delta > 0 ? BMResult::StrictlyGreater : BMResult::Violation;
    }

    if (b == 0 || c == 0) {
        // one root term vanishes: compare a against the other exactly
        Rat other = (b == 0) ? c : b;
        if (a == other) return BMResult::Equal;
        return a > other ? BMResult::StrictlyGreater : BMResult::Violation;
    }
    if (auto rho = exact_nth_root(c / b, n)) {
        Rat rhs = b * pow_rat(1 + *rho, n);
        if (a == rhs) return BMResult::Equal;
        return a > rhs ? BMResult::StrictlyGreater : BMResult::Violation;
    }
    for (unsigned bits = 64; bits <= (1u << 14); bits *= 2) {
        auto ia = detail::root_interval(a, n, bits);
        auto ib = detail::root_interval(b, n, bits);
        auto ic = detail::root_interval(c, n, bits);
        if (ia.lower > ib.upper + ic.upper) return BMResult::StrictlyGreater;
        if (ia.upper < ib.lower + ic.lower) return BMResult::Violation;
    }
    return BMResult::Indeterminate;
}

}  // namespace okounkov
