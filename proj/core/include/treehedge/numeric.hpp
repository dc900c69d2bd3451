#pragma once

// Scalar layer: exact rationals (certification mode) and IEEE doubles
// (float mode) behind one trait interface. Everything numerical in the
// library is templated on the scalar R.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace treehedge {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class R>
struct num_traits;

template <>
struct num_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    // No tolerance: comparisons are exact.
    static Rat feas_tol() { return Rat(0); }
    static Rat pivot_tol() { return Rat(0); }
    static bool is_finite(const Rat&) { return true; }
    static double to_double(const Rat& x) { return x.template convert_to<double>(); }
    static Rat from_double(double x) {
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
        // Exact binary expansion of the IEEE value.
        int exp = 0;
        double m = std::frexp(x, &exp);
        BigInt num = BigInt(static_cast<long long>(std::ldexp(m, 53)));
        exp -= 53;
        Rat r(num);
        if (exp > 0) r *= Rat(BigInt(1) << exp);
        else if (exp < 0) r /= Rat(BigInt(1) << (-exp));
        return r;
    }
    static Rat from_int(long long v) { return Rat(v); }
};

template <>
struct num_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double feas_tol() { return 1e-9; }
    static double pivot_tol() { return 1e-9; }
    static bool is_finite(double x) { return std::isfinite(x); }
    static double to_double(double x) { return x; }
    static double from_double(double x) { return x; }
    static double from_int(long long v) { return static_cast<double>(v); }
};

template <class R>
inline bool leq_tol(const R& a, const R& b) {
    return a <= b + num_traits<R>::feas_tol();
}
template <class R>
inline bool geq_tol(const R& a, const R& b) {
    return a + num_traits<R>::feas_tol() >= b;
}
template <class R>
inline bool eq_tol(const R& a, const R& b) {
    return leq_tol(a, b) && geq_tol(a, b);
}
template <class R>
inline int sign(const R& a) {
    if (a > R(0)) return 1;
    if (a < R(0)) return -1;
    return 0;
}
template <class R>
inline R abs_val(const R& a) { return a < R(0) ? R(-a) : a; }

// ---------------------------------------------------------------------------
// Extended reals: finite value or +infinity. Needed for support-function
// penalties, which are +inf exactly when a conic constraint is violated.

template <class R>
class ExtReal {
public:
    ExtReal() : value_(num_traits<R>::zero()), inf_(false) {}
    explicit ExtReal(R v) : value_(std::move(v)), inf_(false) {}
    static ExtReal infinity() { ExtReal e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    const R& value() const {
        if (inf_) throw std::logic_error("value() on infinite ExtReal");
        return value_;
    }
    ExtReal operator+(const ExtReal& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtReal(value_ + o.value_);
    }
    ExtReal operator+(const R& o) const { return inf_ ? infinity() : ExtReal(value_ + o); }
    bool operator==(const ExtReal& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || value_ == o.value_;
    }
    bool operator<=(const ExtReal& o) const {
        if (o.inf_) return true;
        if (inf_) return false;
        return value_ <= o.value_;
    }

private:
    R value_;
    bool inf_;
};

// ---------------------------------------------------------------------------
// Rational square roots. Ball support functions need ||m||; the sign of
// a + r*sqrt(s) with rational a, r, s >= 0 is decidable without leaving
// rational arithmetic, and that is all the engine ever needs. A certified
// decimal approximation is provided for reporting.

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// sqrt(s) when s is the square of a rational, else nullopt.
inline std::optional<Rat> exact_sqrt(const Rat& s) {
    if (s < 0) return std::nullopt;
    auto num = exact_isqrt(numerator(s));
    if (!num) return std::nullopt;
    auto den = exact_isqrt(denominator(s));
    if (!den) return std::nullopt;
    return Rat(*num, *den);
}

// Bracket sqrt(s) in [lo, hi] with hi - lo <= width.
inline std::pair<Rat, Rat> sqrt_bracket(const Rat& s, const Rat& width) {
    if (s < 0) throw std::domain_error("sqrt of negative rational");
    if (s == 0) return {Rat(0), Rat(0)};
    if (auto e = exact_sqrt(s)) return {*e, *e};
    Rat lo(0), hi = s < 1 ? Rat(1) : s;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (mid * mid <= s) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

// sign(a + r*sqrt(s)) for rational a, r >= 0, s >= 0.
inline int sign_plus_root(const Rat& a, const Rat& r, const Rat& s) {
    if (r < 0 || s < 0) throw std::domain_error("sign_plus_root expects r,s >= 0");
    Rat rad2 = r * r * s;
    if (a >= 0) return (a > 0 || rad2 > 0) ? 1 : 0;
    // a < 0: compare a^2 with r^2 s.
    Rat a2 = a * a;
    if (a2 > rad2) return -1;
    if (a2 < rad2) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Parsing and canonical printing. Rationals print as "p/q" in lowest terms
// (plain "p" for integers); that is the byte-stable on-disk form.

inline std::string to_canonical_string(const Rat& x) {
    BigInt n = numerator(x), d = denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // Integer or decimal literal.
            auto dot = s.find('.');
            auto epos = s.find_first_of("eE");
            if (dot == std::string::npos && epos == std::string::npos) return Rat(BigInt(s));
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) bad();
            return num_traits<Rat>::from_double(v);
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);
}

}  // namespace treehedge
