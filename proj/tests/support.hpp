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

#ifndef GJAC_TESTS_SUPPORT_HPP
#define GJAC_TESTS_SUPPORT_HPP

// Shared generators and independent oracles for the test suite. Nothing here calls
// into the library routines the oracles are meant to check.

#include <gjac/matrix.hpp>
#include <gjac/pfraction.hpp>
#include <gjac/polynomial.hpp>

#include <cstdint>
#include <stdexcept>
#include <random>
#include <vector>

namespace gjac::testing {

using Q = Rational;
using PolyQ = Polynomial<Rational>;

inline Q q(long num, long den = 1) { return Q(num, den); }

inline PolyQ poly(std::initializer_list<long> c) {
    std::vector<Q> v;
    for (long x : c) v.emplace_back(x);
    return PolyQ(std::move(v));
}

inline PFractionTerm<Q> term(int eps, std::optional<Q> b2, PolyQ p) { return {eps, std::move(b2), std::move(p)}; }

inline PFraction<Q> uniform_pf(std::size_t count, int eps, const Q& b2, const PolyQ& p) {
    PFraction<Q> pf;
    for (std::size_t j = 0; j < count; ++j) pf.terms.push_back(term(eps, b2, p));
    pf.degree_cap = static_cast<std::size_t>(p.degree());
    return pf;
}

inline PFraction<Q> catalan_pf(std::size_t count) { return uniform_pf(count, 1, q(1), poly({0, 1})); }

inline PFraction<Q> cross_pf(std::size_t count) { return uniform_pf(count, 1, q(1, 4), poly({0, 0, 1})); }

/// (1,1,lambda^2) followed by Catalan terms.
inline PFraction<Q> degenerate_pf(std::size_t count) {
    PFraction<Q> pf = catalan_pf(count);
    if (count > 0) pf.terms[0].p = poly({0, 0, 1});
    pf.degree_cap = 2;
    return pf;
}

class Random {
   public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    int sign() { return integer(0, 1) ? 1 : -1; }

    Q small_rational(long bound = 3, long den = 4) { return Q(integer(-bound * den, bound * den), integer(1, den)); }

    /// b^2 drawn from [1/4, 4].
    Q coupling() {
        const long den = integer(1, 4);
        return Q(integer((den + 3) / 4, 4 * den), den);
    }

    PolyQ monic(std::size_t degree, long bound = 2) {
        std::vector<Q> c;
        for (std::size_t i = 0; i < degree; ++i) c.push_back(small_rational(bound, 2));
        c.emplace_back(1);
        return PolyQ(std::move(c));
    }

    PFraction<Q> pfraction(std::size_t count, std::size_t max_degree = 3) {
        PFraction<Q> pf;
        pf.degree_cap = max_degree;
        for (std::size_t j = 0; j < count; ++j)
            pf.terms.push_back(term(sign(), coupling(), monic(static_cast<std::size_t>(integer(1, static_cast<long>(max_degree))))));
        return pf;
    }

    std::vector<Q> rationals(std::size_t n, long bound = 3) {
        std::vector<Q> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(small_rational(bound));
        return v;
    }

    std::mt19937_64& engine() { return gen_; }

   private:
    std::mt19937_64 gen_;
};

namespace oracle {

/// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col) == T(0)) continue;
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != col) minor(i - 1, jj++) = m(i, j);
        T term = m(0, col) * cofactor_det(minor);
        acc = col % 2 ? T(acc - term) : T(acc + term);
    }
    return acc;
}

/// Plain Euclid over Q, monic result.
inline PolyQ euclid_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a / a.leading();
}

/// Catalan numbers interleaved with zeros: moments of the semicircle on [-2,2].
inline std::vector<Q> catalan_moments(std::size_t count) {
    std::vector<Q> s(count, Q(0));
    Integer c(1);
    for (std::size_t m = 0; 2 * m < count; ++m) {
        s[2 * m] = Q(c);
        c = c * 2 * (2 * m + 1) / (m + 2);
    }
    return s;
}

/// Laurent coefficients of num/den at infinity by long division:
/// num/den = sum_i c_i lambda^{-(i+1)}, assuming deg num < deg den.
inline std::vector<Q> laurent_by_division(const PolyQ& num, const PolyQ& den, std::size_t count) {
    const auto d = static_cast<std::size_t>(den.degree());
    std::vector<Q> c(count, Q(0));
    PolyQ r = num;
    for (std::size_t i = 0; i < count; ++i) {
        r = r.shifted(1);
        c[i] = r.coeff(d) / den.leading();
        r = r - den * c[i];
    }
    return c;
}

/// Solves A x = rhs by fraction-free (Bareiss) forward elimination with row
/// exchanges, then back substitution.
inline std::vector<Q> fraction_free_solve(Matrix<Q> a, std::vector<Q> rhs) {
    const std::size_t n = a.rows();
    Q previous(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular Hankel system");
        if (piv != k) {
            a.swap_rows(k, piv);
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            rhs[i] = (rhs[i] * a(k, k) - a(i, k) * rhs[k]) / previous;
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    std::vector<Q> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Q acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc / a(k, k);
    }
    return x;
}

struct RationalFunction {
    PolyQ numerator, denominator;
};

/// [n/n] Pade approximant of phi = -sum s_i lambda^{-(i+1)} at infinity from the
/// Hankel system sum_{i<n} c_i s_{i+r} = -s_{n+r}, r < n.
inline RationalFunction hankel_pade(const std::vector<Q>& s, std::size_t n) {
    Matrix<Q> h(n, n);
    std::vector<Q> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) h(r, i) = s.at(i + r);
        rhs[r] = -s.at(n + r);
    }
    std::vector<Q> c = fraction_free_solve(h, rhs);
    c.emplace_back(1);
    std::vector<Q> num(n, Q(0));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t m = 0; m + 1 <= i; ++m) num[i - m - 1] -= c[i] * s.at(m);
    return {PolyQ(num), PolyQ(c)};
}

}  // namespace oracle
}  // namespace gjac::testing

#endif  // GJAC_TESTS_SUPPORT_HPP
