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

#ifndef GJAC_POLYNOMIAL_HPP
#define GJAC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace gjac {

/// Dense univariate polynomial, coefficients low-to-high, kept canonical
/// (no trailing zeros; the zero polynomial has no coefficients).
template <class T>
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
    static Polynomial monomial(const T& coeff, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(T(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    const std::vector<T>& coeffs() const noexcept { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class C>
    C operator()(const C& z) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + scalar_cast<C>(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> c(k, T(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Polynomial(std::move(c));
    }

    template <class U, class F>
    Polynomial<U> map(F f) const {
        std::vector<U> c;
        c.reserve(c_.size());
        for (const T& a : c_) c.push_back(f(a));
        return Polynomial<U>(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<T> c = c_;
        for (T& a : c) a = -a;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (T& a : c_) a *= s;
        trim();
        return *this;
    }
    Polynomial& operator/=(const T& s) {
        for (T& a : c_) a /= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const T& s) { return a /= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return Polynomial(multiply(a.c_, b.c_));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Coefficient vector product; schoolbook below the Karatsuba threshold.
    static std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b) {
        if (a.empty() || b.empty()) return {};
        if (std::min(a.size(), b.size()) <= karatsuba_threshold) return schoolbook(a, b);
        return karatsuba(a, b);
    }

    static constexpr std::size_t karatsuba_threshold = 64;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    static std::vector<T> schoolbook(const std::vector<T>& a, const std::vector<T>& b) {
        std::vector<T> r(a.size() + b.size() - 1, T(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    static std::vector<T> karatsuba(const std::vector<T>& a, const std::vector<T>& b) {
        const std::size_t half = std::max(a.size(), b.size()) / 2;
        auto lo = [half](const std::vector<T>& v) {
            return std::vector<T>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(half, v.size())));
        };
        auto hi = [half](const std::vector<T>& v) {
            return v.size() > half ? std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(half), v.end())
                                   : std::vector<T>{};
        };
        auto add = [](std::vector<T> x, const std::vector<T>& y) {
            if (y.size() > x.size()) x.resize(y.size(), T(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
        const auto z0 = multiply(a0, b0);
        const auto z2 = multiply(a1, b1);
        auto z1 = multiply(add(a0, a1), add(b0, b1));
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

        std::vector<T> r(a.size() + b.size() - 1, T(0));
        for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
        for (std::size_t i = 0; i < z1.size() && i + half < r.size(); ++i) r[i + half] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * half] += z2[i];
        return r;
    }

    std::vector<T> c_;
};

template <class T>
struct DivMod {
    Polynomial<T> quotient, remainder;
};

/// Euclidean division over a field.
template <class T>
DivMod<T> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {{}, a};
    std::vector<T> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<T> q(r.size() - db, T(0));
    const T& lead = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        const T factor = r[k + db] / lead;
        q[k] = factor;
        if (factor == T(0)) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= factor * b.coeffs()[i];
        r[k + db] = T(0);
    }
    r.resize(db);
    return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// Division that must leave no remainder (fraction-free elimination relies on it).
template <class T>
Polynomial<T> exact_quotient(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
template <class T>
Polynomial<T> pseudo_remainder(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.degree() < b.degree()) return a;
    const int delta = a.degree() - b.degree();
    T scale(1);
    for (int i = 0; i <= delta; ++i) scale *= b.leading();
    return divmod(a * scale, b).remainder;
}

/// Subresultant polynomial remainder sequence (Brown-Collins). The last entry is
/// a gcd of the inputs up to a constant factor.
template <class T>
std::vector<Polynomial<T>> subresultant_prs(Polynomial<T> a, Polynomial<T> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    std::vector<Polynomial<T>> chain{a};
    if (b.is_zero()) return chain;
    chain.push_back(b);
    T g(1), h(1);
    while (true) {
        const Polynomial<T>& A = chain[chain.size() - 2];
        const Polynomial<T>& B = chain.back();
        const int delta = A.degree() - B.degree();
        Polynomial<T> r = pseudo_remainder(A, B);
        if (r.is_zero()) break;
        T h_pow(1);
        for (int i = 0; i < delta; ++i) h_pow *= h;
        r /= g * h_pow;
        g = B.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            T g_pow(1);
            for (int i = 0; i < delta; ++i) g_pow *= g;
            T h_den(1);
            for (int i = 0; i < delta - 1; ++i) h_den *= h;
            h = g_pow / h_den;
        }
        chain.push_back(std::move(r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

/// Monic gcd via the subresultant remainder sequence.
template <class T>
Polynomial<T> gcd(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto chain = subresultant_prs(a, b);
    Polynomial<T> g = chain.back();
    if (g.is_zero()) g = chain[chain.size() - 2];
    return g / g.leading();
}

/// Resultant over a field via the Euclidean recursion.
template <class T>
T resultant(Polynomial<T> a, Polynomial<T> b) {
    if (a.is_zero() || b.is_zero()) return T(0);
    T acc(1);
    while (true) {
        const int m = a.degree(), n = b.degree();
        if (n == 0) {
            T p(1);
            for (int i = 0; i < m; ++i) p *= b.leading();
            return acc * p;
        }
        if (m < n) {
            if ((m * n) % 2 != 0) acc = -acc;
            std::swap(a, b);
            continue;
        }
        Polynomial<T> r = divmod(a, b).remainder;
        if (r.is_zero()) return T(0);
        // res(a, b) = (-1)^(mn) lc(b)^(m - deg r) res(b, r)
        if ((m * n) % 2 != 0) acc = -acc;
        for (int i = 0; i < m - r.degree(); ++i) acc *= b.leading();
        a = std::move(b);
        b = std::move(r);
    }
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const T& c = p.coeffs()[i];
        if (c == T(0)) continue;
        if (!first) os << " + ";
        os << "(" << c << ")";
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os;
}

}  // namespace gjac

#endif  // GJAC_POLYNOMIAL_HPP
