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

#ifndef GJAC_MOMENTS_HPP
#define GJAC_MOMENTS_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace gjac {

/// Finite prefix s_0..s_{M-1} of the moments of phi(lambda) = -sum s_j / lambda^(j+1).
template <class T>
struct MomentSequence {
    std::vector<T> coeffs;
    /// Positive factor the raw input was divided by (1 if never normalized).
    T scale = T(1);
    bool normalized = false;

    MomentSequence() = default;
    explicit MomentSequence(std::vector<T> c, T scale_ = T(1), bool normalized_ = false)
        : coeffs(std::move(c)), scale(std::move(scale_)), normalized(normalized_) {
        if constexpr (!ring_traits<T>::exact)
            for (const T& v : coeffs)
                if (!std::isfinite(v)) raise(ErrorKind::Parse, "non-finite moment");
    }

    std::size_t size() const noexcept { return coeffs.size(); }
    const T& operator[](std::size_t i) const { return coeffs[i]; }

    /// Max-norm of the entries, the reference scale for float zero tests.
    T max_norm() const {
        T m(0);
        for (const T& v : coeffs) {
            T a = ring_traits<T>::abs(v);
            if (a > m) m = a;
        }
        return m;
    }
};

struct NormalIndexList {
    std::vector<std::size_t> indices;
    std::size_t certified_up_to = 0;
};

namespace detail {

template <class T>
Matrix<T> hankel_matrix(const std::vector<T>& s, std::size_t n, std::size_t offset = 0) {
    Matrix<T> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) h(i, k) = s[offset + i + k];
    return h;
}

inline double lu_determinant(Matrix<double> m) {
    const std::size_t n = m.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            m.swap_rows(piv, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

template <class T>
T determinant(const Matrix<T>& m) {
    if constexpr (ring_traits<T>::exact) {
        return bareiss_determinant(
            m, [](const T& a, const T& b) { return T(a / b); }, [](const T& a) { return a != 0; });
    } else {
        return lu_determinant(m);
    }
}

}  // namespace detail

/// det(s_{i+k})_{i,k=0}^{n-1}; exact in the rational ring (Bareiss elimination).
template <class T>
T hankel_det(const MomentSequence<T>& s, std::size_t n) {
    if (n == 0) return T(1);
    if (2 * n - 1 > s.size())
        raise(ErrorKind::InsufficientMoments,
              "Hankel size " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) + " moments, have " +
                  std::to_string(s.size()));
    return detail::determinant(detail::hankel_matrix(s.coeffs, n));
}

/// All n <= n_max with a nonvanishing n x n Hankel determinant. The float ring
/// tests determinants of the window pre-scaled to unit max-norm against 1e-12.
template <class T>
NormalIndexList normal_indices(const MomentSequence<T>& s, std::size_t n_max) {
    if (n_max == 0) raise(ErrorKind::OutOfRange, "n_max must be positive");
    if (2 * n_max - 1 > s.size())
        raise(ErrorKind::InsufficientMoments,
              "n_max " + std::to_string(n_max) + " needs " + std::to_string(2 * n_max - 1) + " moments");
    NormalIndexList out;
    out.certified_up_to = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if constexpr (ring_traits<T>::exact) {
            if (hankel_det(s, n) != 0) out.indices.push_back(n);
        } else {
            std::vector<double> window(s.coeffs.begin(), s.coeffs.begin() + static_cast<std::ptrdiff_t>(2 * n - 1));
            double norm = 0.0;
            for (double v : window) norm = std::max(norm, std::abs(v));
            if (norm == 0.0) continue;
            for (double& v : window) v /= norm;
            const double det = detail::lu_determinant(detail::hankel_matrix(window, n));
            if (!ring_traits<double>::is_zero(det)) out.indices.push_back(n);
        }
    }
    return out;
}

/// Index of the first nonvanishing entry, or size() when the sequence is zero.
template <class T>
std::size_t first_nonzero(const std::vector<T>& s, const T& scale) {
    std::size_t i = 0;
    while (i < s.size() && ring_traits<T>::is_zero(s[i], scale)) ++i;
    return i;
}

/// Divides by |c|, c the first nonzero entry, so that entry becomes +-1.
template <class T>
MomentSequence<T> normalize(const MomentSequence<T>& s) {
    if (s.size() == 0) raise(ErrorKind::InsufficientMoments, "empty moment sequence");
    const T norm = s.max_norm();
    const std::size_t i = first_nonzero(s.coeffs, norm);
    if (i == s.size()) raise(ErrorKind::AllZero, "every moment vanishes");
    const T c = ring_traits<T>::abs(s.coeffs[i]);
    std::vector<T> out;
    out.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k < i)
            out.push_back(T(0));
        else
            out.push_back(T(s.coeffs[k] / c));
    }
    if constexpr (!ring_traits<T>::exact) out[i] = out[i] > 0 ? 1.0 : -1.0;
    return MomentSequence<T>(std::move(out), T(s.scale * c), true);
}

}  // namespace gjac

#endif  // GJAC_MOMENTS_HPP
