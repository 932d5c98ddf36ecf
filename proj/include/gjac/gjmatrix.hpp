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

#ifndef GJAC_GJMATRIX_HPP
#define GJAC_GJMATRIX_HPP

// Generalized Jacobi matrices: companion blocks A_j = C_{p_j} on the diagonal,
// single-entry couplings B_j (b_j) below and Btilde_j (eps_j eps_{j+1} b_j) above,
// and the block-diagonal metric G_j = eps_j E_{p_j}^{-1}.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "moments.hpp"
#include "pfraction.hpp"
#include "polynomial.hpp"
#include "series.hpp"

namespace gjac {

template <class T>
struct CompanionBlock {
    Polynomial<T> p;
    Matrix<T> C;  // companion: ones below the diagonal, last column -p_0..-p_{k-1}
    Matrix<T> E;  // symmetrizer: E(i,j) = p_{i+j+1}

    std::size_t size() const noexcept { return C.rows(); }

    /// E^{-1}(i,j) = g_{i+j-k+1}, g = 1/(1 + p_{k-1} x + ... + p_0 x^k).
    Matrix<T> E_inverse() const {
        const std::size_t k = size();
        const std::vector<T> g = series_reciprocal(reversed(p), k);
        Matrix<T> inv(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i + j + 1 >= k) inv(i, j) = g[i + j + 1 - k];
        return inv;
    }
};

template <class T>
CompanionBlock<T> companion(const Polynomial<T>& p) {
    if (p.degree() < 1 || !p.is_monic()) raise(ErrorKind::NotMonic, "companion block needs a monic polynomial of degree >= 1");
    const auto k = static_cast<std::size_t>(p.degree());
    CompanionBlock<T> b{p, Matrix<T>(k, k), Matrix<T>(k, k)};
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) b.C(i, i - 1) = T(1);
        b.C(i, k - 1) = T(-p.coeff(i));
        for (std::size_t j = 0; i + j + 1 <= k && j < k; ++j) b.E(i, j) = p.coeff(i + j + 1);
    }
    return b;
}

template <class T>
struct GJMatrix {
    std::vector<CompanionBlock<T>> blocks;
    std::vector<int> signs;
    /// b_j^2 couples block j to block j+1.
    std::vector<std::optional<T>> b_squared;
    std::size_t degree_cap = 0;
    /// The underlying P-fraction terminated, so the matrix is finite.
    bool finite = false;
    T scale = T(1);

    std::size_t block_count() const noexcept { return blocks.size(); }

    /// n_0 = 0, ..., n_J = total dimension.
    std::vector<std::size_t> offsets() const {
        std::vector<std::size_t> n{0};
        for (const auto& b : blocks) n.push_back(n.back() + b.size());
        return n;
    }

    std::size_t dimension(std::size_t count) const { return offsets().at(count); }

    const T& coupling(std::size_t j) const {
        if (j >= b_squared.size() || !b_squared[j])
            raise(ErrorKind::NotEnoughTerms, "coupling b^2 of block " + std::to_string(j) + " is unknown");
        return *b_squared[j];
    }
};

template <class T>
GJMatrix<T> assemble(const PFraction<T>& pf) {
    if (pf.empty()) raise(ErrorKind::EmptyPFraction, "no terms to assemble");
    GJMatrix<T> h;
    h.degree_cap = pf.degree_cap;
    h.finite = pf.status == PFractionStatus::terminated;
    h.scale = pf.scale;
    for (const auto& t : pf.terms) {
        if (pf.degree_cap > 0 && t.degree() > pf.degree_cap)
            raise(ErrorKind::DegreeCapExceeded,
                  "block degree " + std::to_string(t.degree()) + " exceeds cap " + std::to_string(pf.degree_cap));
        h.blocks.push_back(companion(t.p));
        h.signs.push_back(t.epsilon);
        h.b_squared.push_back(t.b_squared);
    }
    return h;
}

template <class T>
struct GramMetric {
    std::vector<Matrix<T>> blocks;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.rows();
        return n;
    }

    /// (G x, y) for real or complex vectors; y is conjugated.
    template <class V>
    V form(const std::vector<V>& x, const std::vector<V>& y) const {
        V acc(0);
        std::size_t off = 0;
        for (const auto& g : blocks) {
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j) {
                    if (g(i, j) == T(0)) continue;
                    if constexpr (is_complex_v<V>)
                        acc += scalar_cast<V>(g(i, j)) * x[off + j] * conj(y[off + i]);
                    else
                        acc += scalar_cast<V>(g(i, j)) * x[off + j] * y[off + i];
                }
            off += g.rows();
        }
        return acc;
    }
};

/// G_j = eps_j E_j^{-1} for the first `count` blocks.
template <class T>
GramMetric<T> gram(const GJMatrix<T>& h, std::size_t count) {
    if (count > h.block_count()) raise(ErrorKind::BadRange, "metric deeper than the matrix");
    GramMetric<T> g;
    for (std::size_t j = 0; j < count; ++j) {
        Matrix<T> inv = h.blocks[j].E_inverse();
        if (h.signs[j] < 0)
            for (std::size_t r = 0; r < inv.rows(); ++r)
                for (std::size_t c = 0; c < inv.cols(); ++c) inv(r, c) = T(-inv(r, c));
        g.blocks.push_back(std::move(inv));
    }
    return g;
}

template <class T>
GramMetric<T> gram(const GJMatrix<T>& h) {
    return gram(h, h.block_count());
}

/// Metric matching scaled_truncation: block j carries the extra factor
/// prod_{i<j} b_i^2.
template <class T>
GramMetric<T> scaled_gram(const GJMatrix<T>& h, std::size_t count) {
    GramMetric<T> g = gram(h, count);
    T beta2(1);
    for (std::size_t j = 0; j < count; ++j) {
        if (j > 0) beta2 *= h.coupling(j - 1);
        for (std::size_t r = 0; r < g.blocks[j].rows(); ++r)
            for (std::size_t c = 0; c < g.blocks[j].cols(); ++c) g.blocks[j](r, c) *= beta2;
    }
    return g;
}

namespace detail {

template <class T, class U, class Coupling>
Matrix<U> assemble_dense(const GJMatrix<T>& h, std::size_t first, std::size_t last, Coupling coupling) {
    if (first > last || last >= h.block_count()) raise(ErrorKind::BadRange, "bad block range");
    std::vector<std::size_t> n{0};
    for (std::size_t j = first; j <= last; ++j) n.push_back(n.back() + h.blocks[j].size());
    Matrix<U> m(n.back(), n.back(), U(0));
    for (std::size_t j = first; j <= last; ++j) {
        const std::size_t o = n[j - first];
        const auto& c = h.blocks[j].C;
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t s = 0; s < c.cols(); ++s) m(o + r, o + s) = scalar_cast<U>(c(r, s));
        if (j < last) {
            const auto [below, above] = coupling(j);
            m(n[j + 1 - first], n[j + 1 - first] - 1) = below;
            m(o, n[j + 2 - first] - 1) = above;
        }
    }
    return m;
}

}  // namespace detail

/// Dense truncation of blocks first..last with the true couplings b_j = sqrt(b_j^2).
template <class T>
Matrix<double> truncation(const GJMatrix<T>& h, std::size_t first, std::size_t last) {
    return detail::assemble_dense<T, double>(h, first, last, [&](std::size_t j) {
        const double b = std::sqrt(ring_traits<T>::to_double(h.coupling(j)));
        return std::pair<double, double>{b, h.signs[j] * h.signs[j + 1] * b};
    });
}

/// The truncation conjugated by diag(1/(b_0...b_{j-1})) per block: couplings become
/// 1 below and eps_j eps_{j+1} b_j^2 above, so the entries stay in the ring.
template <class T>
Matrix<T> scaled_truncation(const GJMatrix<T>& h, std::size_t first, std::size_t last) {
    return detail::assemble_dense<T, T>(h, first, last, [&](std::size_t j) {
        return std::pair<T, T>{T(1), T(h.signs[j] * h.signs[j + 1]) * h.coupling(j)};
    });
}

/// |[Hx,y] - [x,Hy]| on the first `trunc` blocks. The exact ring works in the
/// scaled coordinates, the float ring with the true couplings.
template <class T>
T symmetry_defect(const GJMatrix<T>& h, std::size_t trunc, const std::vector<T>& x, const std::vector<T>& y) {
    if (trunc == 0 || trunc > h.block_count()) raise(ErrorKind::BadRange, "bad truncation");
    const std::size_t n = h.dimension(trunc);
    if (x.size() != n || y.size() != n) raise(ErrorKind::BadRange, "vectors must span the truncation");
    const std::size_t safe = trunc >= 2 ? h.dimension(trunc - 1) : 0;
    for (std::size_t i = safe; i < n; ++i)
        if (!ring_traits<T>::is_zero(x[i]) || !ring_traits<T>::is_zero(y[i]))
            raise(ErrorKind::SupportTooWide, "support must stay one block inside the truncation");
    T lhs, rhs;
    if constexpr (ring_traits<T>::exact) {
        const Matrix<T> m = scaled_truncation(h, 0, trunc - 1);
        const GramMetric<T> g = scaled_gram(h, trunc);
        lhs = g.form(m.apply(x), y);
        rhs = g.form(x, m.apply(y));
    } else {
        const Matrix<double> m = truncation(h, 0, trunc - 1);
        const GramMetric<T> g = gram(h, trunc);
        lhs = g.form(m.apply(x), y);
        rhs = g.form(x, m.apply(y));
    }
    return ring_traits<T>::abs(T(lhs - rhs));
}

namespace detail {

/// Fraction-free elimination over T[lambda]. The pivots are leading principal
/// minors of lambda - M, which are monic, so no row exchanges occur.
template <class T>
Polynomial<T> polynomial_bareiss(std::vector<std::vector<Polynomial<T>>> a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial<T>::constant(T(1));
    Polynomial<T> previous = Polynomial<T>::constant(T(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) raise(ErrorKind::BadRange, "vanishing pivot in characteristic polynomial");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_quotient(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
            a[i][k] = {};
        }
        previous = a[k][k];
    }
    return a[n - 1][n - 1];
}

}  // namespace detail

/// det(lambda - H_{[j_lo, j_hi]}), exact.
template <class T>
Polynomial<T> truncation_charpoly(const GJMatrix<T>& h, std::size_t j_lo, std::size_t j_hi) {
    if (j_lo > j_hi || j_hi >= h.block_count()) raise(ErrorKind::BadRange, "need 0 <= j_lo <= j_hi < block count");
    const Matrix<T> m = scaled_truncation(h, j_lo, j_hi);
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial<T>>> a(n, std::vector<Polynomial<T>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial<T>::constant(T(-m(i, j)));
            if (i == j) a[i][j] += Polynomial<T>::x();
        }
    return detail::polynomial_bareiss(std::move(a));
}

template <class C>
struct ScaledValues {
    C p, q;      // Phat, Qhat of the fraction starting at the first block
    double bound;  // same recurrence on absolute values, for pole tests
};

/// Phat_{m}(lambda), Qhat_{m}(lambda) of the fraction built from blocks
/// first..first+m-1.
template <class T, class C>
ScaledValues<C> scaled_values(const GJMatrix<T>& h, std::size_t first, std::size_t m, const C& lambda) {
    using std::abs;
    if (first + m > h.block_count()) raise(ErrorKind::BadRange, "not enough blocks");
    if (m == 0) return {C(1), C(0), 1.0};
    C p0(1), p1 = h.blocks[first].p(lambda);
    C q0(0), q1(h.signs[first]);
    const double mod = static_cast<double>(abs(lambda));
    auto mag = [&](std::size_t j) {
        double acc = 0.0;
        const auto& c = h.blocks[j].p.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * mod + std::abs(ring_traits<T>::to_double(*it));
        return acc;
    };
    double bp0 = 1.0, bp1 = mag(first);
    for (std::size_t i = 1; i < m; ++i) {
        const std::size_t j = first + i;
        const T coupling = T(h.signs[j - 1] * h.signs[j]) * h.coupling(j - 1);
        const C pj = h.blocks[j].p(lambda), cc = scalar_cast<C>(coupling);
        const C p2 = pj * p1 - cc * p0, q2 = pj * q1 - cc * q0;
        const double b2 = mag(j) * bp1 + std::abs(ring_traits<T>::to_double(coupling)) * bp0;
        p0 = p1, p1 = p2, q0 = q1, q1 = q2, bp0 = bp1, bp1 = b2;
    }
    return {p1, q1, bp1};
}

namespace detail {

template <class C>
C m_from_values(const ScaledValues<C>& v, double pole_tol) {
    using std::abs;
    if (static_cast<double>(abs(v.p)) <= pole_tol * v.bound)
        raise(ErrorKind::PoleAtLambda, "lambda is an eigenvalue of the truncation");
    return C(-v.q / v.p);
}

}  // namespace detail

/// m-function of H_{[0,j]}: -Qhat_{j+1}(lambda) / Phat_{j+1}(lambda).
template <class T, class C>
C m_truncation(const GJMatrix<T>& h, std::size_t j, const C& lambda, double pole_tol = 1e-13) {
    return detail::m_from_values(scaled_values(h, 0, j + 1, lambda), pole_tol);
}

/// Same value through the resolvent: [(H_{[0,j]} - lambda)^{-1} e, e].
template <class T>
Complex m_resolvent(const GJMatrix<T>& h, std::size_t j, const Complex& lambda) {
    const Matrix<double> m = truncation(h, 0, j);
    const std::size_t n = m.rows();
    Matrix<Complex> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex(m(r, c)) - (r == c ? lambda : Complex(0));
    std::vector<Complex> e(n, Complex(0));
    e[0] = 1.0;
    const std::vector<Complex> x = lu_solve(a, e);
    const GramMetric<T> g = gram(h, 1);
    Complex acc(0);
    for (std::size_t c = 0; c < g.blocks[0].cols(); ++c) acc += ring_traits<T>::to_double(g.blocks[0](0, c)) * x[c];
    return acc;
}

/// |m_{[0,j]} + eps_0 / (p_0 + eps_0 b_0^2 m_{[1,j]})|.
template <class T, class C>
double riccati_defect(const GJMatrix<T>& h, std::size_t j, const C& lambda, double pole_tol = 1e-13) {
    using std::abs;
    if (j == 0) raise(ErrorKind::BadRange, "m_{[1,j]} needs j >= 1");
    const C m0 = m_truncation(h, j, lambda, pole_tol);
    const C m1 = detail::m_from_values(scaled_values(h, 1, j, lambda), pole_tol);
    const C e0(h.signs[0]);
    const C denom = h.blocks[0].p(lambda) + e0 * scalar_cast<C>(h.coupling(0)) * m1;
    if (denom == C(0)) raise(ErrorKind::PoleAtLambda, "Riccati denominator vanishes");
    return static_cast<double>(abs(m0 + e0 / denom));
}

/// s_i = [H^i e, e] = (G H^i e, e), exact, de-normalized by the matrix scale.
/// A truncation with n_J rows reproduces s_0..s_{2 n_J - 1}.
template <class T>
MomentSequence<T> moments_from_matrix(const GJMatrix<T>& h, std::size_t count) {
    if (h.block_count() == 0) raise(ErrorKind::TruncationTooShallow, "empty matrix");
    const std::size_t n = h.dimension(h.block_count());
    if (!h.finite && count > 2 * n)
        raise(ErrorKind::TruncationTooShallow,
              std::to_string(count) + " moments need n_J >= " + std::to_string((count + 1) / 2) + ", have " +
                  std::to_string(n));
    const Matrix<T> m = scaled_truncation(h, 0, h.block_count() - 1);
    const GramMetric<T> g = scaled_gram(h, h.block_count());
    std::vector<std::vector<T>> powers;
    std::vector<T> v(n, T(0));
    v[0] = T(1);
    powers.push_back(v);
    const std::size_t need = count / 2;
    for (std::size_t a = 1; a <= need; ++a) powers.push_back(m.apply(powers.back()));
    std::vector<T> s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = g.form(powers[(i + 1) / 2], powers[i / 2]) * h.scale;
    return MomentSequence<T>(std::move(s));
}

struct NumericalRange {
    std::vector<double> angles;
    /// h(theta) = max eigenvalue of the Hermitian part of e^{i theta} H.
    std::vector<double> support;
    /// Intersections of consecutive supporting lines, counter-clockwise.
    std::vector<Complex> vertices;

    double max_support() const {
        double m = -HUGE_VAL;
        for (double v : support) m = std::max(m, v);
        return m;
    }

    /// z lies in every half-plane x cos(theta) - y sin(theta) <= h(theta) + tol.
    bool contains(const Complex& z, double tol = 0.0) const {
        for (std::size_t k = 0; k < angles.size(); ++k)
            if (z.real() * std::cos(angles[k]) - z.imag() * std::sin(angles[k]) > support[k] + tol) return false;
        return true;
    }
};

/// Field of values of the dense truncation, plain l^2 inner product.
template <class T>
NumericalRange numerical_range_bound(const GJMatrix<T>& h, std::size_t trunc_blocks, std::size_t angles) {
    if (trunc_blocks == 0 || trunc_blocks > h.block_count()) raise(ErrorKind::BadRange, "bad truncation");
    if (angles < 4) raise(ErrorKind::BadRange, "need at least four angles");
    const Matrix<double> a = truncation(h, 0, trunc_blocks - 1);
    const std::size_t n = a.rows();
    NumericalRange out;
    for (std::size_t k = 0; k < angles; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles);
        const double c = std::cos(theta), s = std::sin(theta);
        // cos S + i sin K, embedded as [[R, -I], [I, R]].
        Matrix<double> e(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double re = c * 0.5 * (a(i, j) + a(j, i));
                const double im = s * 0.5 * (a(i, j) - a(j, i));
                e(i, j) = re;
                e(n + i, n + j) = re;
                e(i, n + j) = -im;
                e(n + i, j) = im;
            }
        out.angles.push_back(theta);
        out.support.push_back(jacobi_eigenvalues(std::move(e)).back());
    }
    for (std::size_t k = 0; k < angles; ++k) {
        const std::size_t l = (k + 1) % angles;
        const double c1 = std::cos(out.angles[k]), s1 = -std::sin(out.angles[k]);
        const double c2 = std::cos(out.angles[l]), s2 = -std::sin(out.angles[l]);
        const double det = c1 * s2 - c2 * s1;
        const double x = (out.support[k] * s2 - out.support[l] * s1) / det;
        const double y = (c1 * out.support[l] - c2 * out.support[k]) / det;
        out.vertices.emplace_back(x, y);
    }
    return out;
}

struct GramNorms {
    double norm = 0.0;
    double inverse_norm = 0.0;
};

/// Spectral norms of G and G^{-1} on the first `count` blocks.
template <class T>
GramNorms gram_norms(const GJMatrix<T>& h, std::size_t count) {
    GramNorms out;
    const GramMetric<T> g = gram(h, count);
    for (std::size_t j = 0; j < count; ++j) {
        const auto& blk = g.blocks[j];
        Matrix<double> gd(blk.rows(), blk.cols()), ed(blk.rows(), blk.cols());
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c) {
                gd(r, c) = ring_traits<T>::to_double(blk(r, c));
                ed(r, c) = h.signs[j] * ring_traits<T>::to_double(h.blocks[j].E(r, c));
            }
        const auto ge = jacobi_eigenvalues(gd), ee = jacobi_eigenvalues(ed);
        out.norm = std::max({out.norm, std::abs(ge.front()), std::abs(ge.back())});
        out.inverse_norm = std::max({out.inverse_norm, std::abs(ee.front()), std::abs(ee.back())});
    }
    return out;
}

}  // namespace gjac

#endif  // GJAC_GJMATRIX_HPP
