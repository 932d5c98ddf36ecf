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

#ifndef GJAC_SERIES_HPP
#define GJAC_SERIES_HPP

// Truncated power series in x = 1/lambda, coefficients low-to-high.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace gjac {

template <class T>
std::vector<T> series_multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
    std::vector<T> a_cut(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(n, a.size())));
    std::vector<T> b_cut(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(std::min(n, b.size())));
    std::vector<T> r = Polynomial<T>::multiply(a_cut, b_cut);
    r.resize(n, T(0));
    return r;
}

/// 1/a mod x^n by Newton doubling: g <- g (2 - a g).
template <class T>
std::vector<T> series_reciprocal(const std::vector<T>& a, std::size_t n) {
    if (a.empty() || a[0] == T(0)) throw std::domain_error("series reciprocal needs a nonzero constant term");
    std::vector<T> g{T(1) / a[0]};
    std::size_t have = 1;
    while (have < n) {
        have = std::min(2 * have, n);
        std::vector<T> ag = series_multiply(a, g, have);
        for (T& c : ag) c = -c;
        ag[0] += T(2);
        g = series_multiply(g, ag, have);
    }
    g.resize(n, T(0));
    return g;
}

/// Reversed coefficient list x^d p(1/x) for d = deg p.
template <class T>
std::vector<T> reversed(const Polynomial<T>& p) {
    std::vector<T> r(p.coeffs().rbegin(), p.coeffs().rend());
    return r;
}

/// Coefficients c_0..c_{count-1} of num/den = sum_i c_i lambda^-(i+1) at infinity.
/// Requires deg num < deg den.
template <class T>
std::vector<T> laurent_at_infinity(const Polynomial<T>& num, const Polynomial<T>& den, std::size_t count) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return std::vector<T>(count, T(0));
    const int shift = den.degree() - num.degree() - 1;
    if (shift < 0) throw std::domain_error("rational function is not strictly proper");
    const std::size_t s = static_cast<std::size_t>(shift);
    std::vector<T> out(count, T(0));
    if (s >= count) return out;
    const std::size_t need = count - s;
    std::vector<T> q = series_multiply(reversed(num), series_reciprocal(reversed(den), need), need);
    std::copy(q.begin(), q.end(), out.begin() + static_cast<std::ptrdiff_t>(s));
    return out;
}

}  // namespace gjac

#endif  // GJAC_SERIES_HPP
