#pragma once

/**
 * @file rational.hpp
 * @brief Exact number types and small vector helpers shared by the library.
 *
 * All arithmetic is exact: Int is an arbitrary-precision integer, Rat an
 * always-canonical rational (reduced fraction, positive denominator).
 * No floating point enters any predicate or volume; decimals appear only
 * in informational report columns.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "okounkov/errors.hpp"

namespace okounkov {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense integer vector (rays, halfspace normals, lattice points).
using ZVec = std::vector<Int>;
/// Dense rational vector (polytope vertices, directions).
using QVec = std::vector<Rat>;

inline Int dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Mixed dot product: integer normal against a rational point.
inline Rat dot(const ZVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const ZVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// gcd of all entries' absolute values; 0 for the zero vector.
inline Int content(const ZVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content. Direction (sign pattern) is preserved; the zero
/// vector is returned unchanged.
inline ZVec primitive(ZVec v) {
    Int g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

/// Clears denominators and reduces: the primitive integer vector on the same
/// ray through the origin as q.
inline ZVec primitive_of(const QVec& q) {
    Int l = 1;
    for (const auto& x : q) l = boost::multiprecision::lcm(l, denominator(x));
    ZVec v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        v[i] = numerator(q[i]) * (l / denominator(q[i]));
    return primitive(std::move(v));
}

inline QVec to_qvec(const ZVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

inline Int floor_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);  // truncates toward zero
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (numerator(x) > 0 && q * denominator(x) != numerator(x)) ++q;
    return q;
}

inline bool is_integral(const Rat& x) { return denominator(x) == 1; }

/// x^n componentwise on numerator/denominator (boost's pow covers integers only).
inline Rat pow_rat(const Rat& x, unsigned n) {
    return Rat(boost::multiprecision::pow(numerator(x), n),
               boost::multiprecision::pow(denominator(x), n));
}

/// Lexicographic order on vectors; the canonical ordering used everywhere.
template <typename Vec>
bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

template <typename Vec>
std::string vec_to_string(const Vec& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

/// Parses "7/2", "-3", "0" into a canonical rational. Whitespace is not
/// tolerated; the denominator must be positive and nonzero.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&]() -> parse_error {
        return parse_error("not a rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw bad();
    return Rat(Int(num), d);
}

}  // namespace okounkov
