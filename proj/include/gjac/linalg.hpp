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

#ifndef GJAC_LINALG_HPP
#define GJAC_LINALG_HPP

// Small dense kernels: symmetric eigenvalues by cyclic Jacobi rotations and a
// partially pivoted LU solve.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace gjac {

/// Eigenvalues of a real symmetric matrix, ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix<double> a, double tol = 1e-14, int max_sweeps = 100) {
    const std::size_t n = a.rows();
    if (n == 0) return {};
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
    const double threshold = tol * std::max(std::sqrt(total), 1e-300);

    for (int sweep = 0; sweep < max_sweeps && off_norm() > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Solves A x = rhs with partial pivoting. Throws PoleAtLambda on an exactly
/// singular pivot or one below `singular_tol` relative to the largest entry.
template <class C>
std::vector<C> lu_solve(Matrix<C> a, std::vector<C> rhs, double singular_tol = 1e-14) {
    using std::abs;
    const std::size_t n = a.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, static_cast<double>(abs(a(i, j))));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = static_cast<double>(abs(a(k, k)));
        for (std::size_t i = k + 1; i < n; ++i)
            if (const double v = static_cast<double>(abs(a(i, k))); v > best) best = v, piv = i;
        if (best <= singular_tol * std::max(scale, 1e-300)) raise(ErrorKind::PoleAtLambda, "singular system");
        if (piv != k) {
            a.swap_rows(k, piv);
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const C f = a(i, k) / a(k, k);
            if (f == C(0)) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<C> x(n);
    for (std::size_t k = n; k-- > 0;) {
        C acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc / a(k, k);
    }
    return x;
}

}  // namespace gjac

#endif  // GJAC_LINALG_HPP
