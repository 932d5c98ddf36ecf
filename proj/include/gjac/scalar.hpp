/*
   Copyright 2026 The gjac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GJAC_SCALAR_HPP
#define GJAC_SCALAR_HPP

// Coefficient rings. Exact work happens over GMP rationals; evaluation happens
// in double or, where cancellation demands it, in 100-digit binary floats.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <type_traits>

#include "error.hpp"

namespace gjac {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Complex = std::complex<double>;
using Real100 = boost::multiprecision::cpp_bin_float_100;
using Complex100 = boost::multiprecision::cpp_complex_100;

template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x, const Rational& /*scale*/ = Rational(1)) { return x == 0; }
    static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
    static double to_double(const Rational& x) { return static_cast<double>(x); }
    static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct ring_traits<double> {
    static constexpr bool exact = false;
    // Float-ring zero test: absolute tolerance on data pre-scaled to unit max-norm.
    static constexpr double zero_tolerance = 1e-12;
    static bool is_zero(double x, double scale = 1.0) {
        return std::abs(x) <= zero_tolerance * (scale > 0 ? scale : 1.0);
    }
    static double abs(double x) { return std::abs(x); }
    static double to_double(double x) { return x; }
    static std::string to_string(double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <class C>
struct complex_traits;

template <>
struct complex_traits<Complex> {
    using real_type = double;
    static constexpr int digits10 = 15;
};

template <>
struct complex_traits<Complex100> {
    using real_type = Real100;
    static constexpr int digits10 = 100;
};

template <class C>
using real_of = typename complex_traits<C>::real_type;

template <class T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex> || std::is_same_v<T, Complex100>;

/// Converts between the supported scalar types (rational, double, complex, 100-digit).
template <class To, class From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, Complex>) {
        if constexpr (std::is_same_v<From, Complex100>)
            return Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
        else if constexpr (std::is_same_v<From, Real100>)
            return Complex(static_cast<double>(x), 0.0);
        else
            return Complex(static_cast<double>(x), 0.0);
    } else if constexpr (std::is_same_v<To, Complex100>) {
        if constexpr (std::is_same_v<From, Complex>)
            return Complex100(Real100(x.real()), Real100(x.imag()));
        else
            return Complex100(Real100(x), Real100(0));
    } else {
        return static_cast<To>(x);
    }
}

inline Real100 sqrt_of(const Rational& x) {
    using boost::multiprecision::sqrt;
    return sqrt(Real100(x));
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

/// Base-10 integer from an optionally signed digit string; leading zeros are
/// dropped so the string is never read as octal.
inline Integer decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    const bool negative = i == 1 && s[0] == '-';
    while (i + 1 < s.size() && s[i] == '0') ++i;
    Integer v(s.substr(i));
    return negative ? Integer(-v) : v;
}

}  // namespace detail

/// True when the literal needs a decimal point or exponent (i.e. is not "p" or "p/q").
inline bool is_decimal_literal(const std::string& text) {
    const std::string s = detail::trim(text);
    return s.find_first_of(".eE") != std::string::npos;
}

/// Parses "p", "p/q" or a decimal literal ("0.125", "-1.5e-3") into an exact rational.
inline Rational parse_rational(const std::string& text) {
    const std::string s = detail::trim(text);
    if (s.empty()) raise(ErrorKind::Parse, "empty number");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
            raise(ErrorKind::Parse, "bad rational '" + s + "'");
        const Integer d = detail::decimal_integer(den);
        if (d == 0) raise(ErrorKind::Parse, "zero denominator in '" + s + "'");
        return Rational(detail::decimal_integer(num), d);
    }
    if (detail::is_integer_literal(s)) return Rational(detail::decimal_integer(s));

    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        const std::string ex = s.substr(e + 1);
        if (!detail::is_integer_literal(ex)) raise(ErrorKind::Parse, "bad exponent in '" + s + "'");
        exponent = std::stol(ex);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char ch : mantissa) {
        if (ch == '.') {
            if (seen_point) raise(ErrorKind::Parse, "bad decimal '" + s + "'");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_point) ++frac_digits;
        } else {
            raise(ErrorKind::Parse, "bad decimal '" + s + "'");
        }
    }
    if (digits.empty()) raise(ErrorKind::Parse, "bad decimal '" + s + "'");
    Rational value{detail::decimal_integer(digits)};
    const long shift = exponent - frac_digits;
    Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    value = shift < 0 ? Rational(value / Rational(ten_pow)) : Rational(value * Rational(ten_pow));
    return negative ? Rational(-value) : value;
}

inline double parse_double(const std::string& text) {
    const std::string s = detail::trim(text);
    if (s.find('/') != std::string::npos) return static_cast<double>(parse_rational(s));
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) raise(ErrorKind::Parse, "trailing characters in '" + s + "'");
        if (!std::isfinite(v)) raise(ErrorKind::Parse, "non-finite value '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::Parse, "bad number '" + s + "'");
    } catch (const std::out_of_range&) {
        raise(ErrorKind::Parse, "number out of range '" + s + "'");
    }
}

}  // namespace gjac

#endif  // GJAC_SCALAR_HPP
