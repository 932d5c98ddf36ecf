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

#ifndef GJAC_POLYREC_HPP
#define GJAC_POLYREC_HPP

// Associated polynomials of a P-fraction. Exact work uses the monic-scaled
// sequences Phat_j = (b_0...b_{j-1}) P_j, Qhat_j = (b_0...b_{j-1}) Q_j, which only
// involve b^2:
//   u_{j+1} = p_j u_j - eps_{j-1} eps_j b_{j-1}^2 u_{j-1},
//   Phat_0 = 1, Phat_1 = p_0, Qhat_0 = 0, Qhat_1 = eps_0.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pfraction.hpp"
#include "polynomial.hpp"

namespace gjac {

template <class T>
struct OrthoSequences {
    std::vector<Polynomial<T>> p_hat;
    std::vector<Polynomial<T>> q_hat;
    /// prod_{i<j} b_i^2 for j = 0..depth(); absent once an unknown coupling enters.
    std::vector<std::optional<T>> b2_products;
    PFraction<T> source;

    std::size_t depth() const noexcept { return p_hat.empty() ? 0 : p_hat.size() - 1; }
};

template <class T>
OrthoSequences<T> generate(const PFraction<T>& pf, std::size_t j_max) {
    if (pf.size() < j_max)
        raise(ErrorKind::NotEnoughTerms, "need " + std::to_string(j_max) + " terms, have " + std::to_string(pf.size()));
    OrthoSequences<T> seqs;
    seqs.source = pf;
    seqs.p_hat.push_back(Polynomial<T>::constant(T(1)));
    seqs.q_hat.push_back(Polynomial<T>{});
    seqs.b2_products.push_back(T(1));
    if (j_max == 0) return seqs;
    seqs.p_hat.push_back(pf.terms[0].p);
    seqs.q_hat.push_back(Polynomial<T>::constant(T(pf.terms[0].epsilon)));
    for (std::size_t j = 1; j <= j_max; ++j) {
        const auto& prev = pf.terms[j - 1];
        std::optional<T> prod;
        if (seqs.b2_products[j - 1] && prev.b_squared) prod = *seqs.b2_products[j - 1] * *prev.b_squared;
        seqs.b2_products.push_back(prod);
        if (j == j_max) break;
        const auto& term = pf.terms[j];
        if (!prev.b_squared)
            raise(ErrorKind::NotEnoughTerms, "coupling b^2 of term " + std::to_string(j - 1) + " is unknown");
        const T coupling = T(prev.epsilon * term.epsilon) * *prev.b_squared;
        seqs.p_hat.push_back(term.p * seqs.p_hat[j] - seqs.p_hat[j - 1] * coupling);
        seqs.q_hat.push_back(term.p * seqs.q_hat[j] - seqs.q_hat[j - 1] * coupling);
    }
    return seqs;
}

namespace detail {

template <class C>
C sqrt_scalar(const Rational& x) {
    if constexpr (std::is_same_v<C, Complex100>)
        return Complex100(sqrt_of(x), Real100(0));
    else
        return C(std::sqrt(static_cast<double>(x)));
}

template <class C>
C sqrt_scalar(double x) {
    if constexpr (std::is_same_v<C, Complex100>) {
        using boost::multiprecision::sqrt;
        return Complex100(sqrt(Real100(x)), Real100(0));
    } else {
        return C(std::sqrt(x));
    }
}

}  // namespace detail

/// (P_j(lambda), Q_j(lambda)) in the b-normalized convention.
template <class C, class T>
std::pair<C, C> eval_normalized(const OrthoSequences<T>& seqs, std::size_t j, const C& lambda) {
    if (j > seqs.depth()) raise(ErrorKind::OutOfRange, "index " + std::to_string(j) + " beyond generated depth");
    if (!seqs.b2_products[j]) raise(ErrorKind::OutOfRange, "normalization of index " + std::to_string(j) + " unknown");
    const C beta = detail::sqrt_scalar<C>(*seqs.b2_products[j]);
    return {seqs.p_hat[j](lambda) / beta, seqs.q_hat[j](lambda) / beta};
}

/// P_j, Q_j for j = 0..depth by forward recurrence directly in C; avoids building
/// exact polynomials for deep evaluations.
template <class C, class T>
std::pair<std::vector<C>, std::vector<C>> normalized_values(const PFraction<T>& pf, const C& lambda,
                                                              std::size_t depth) {
    if (pf.size() < depth)
        raise(ErrorKind::NotEnoughTerms, "need " + std::to_string(depth) + " terms, have " + std::to_string(pf.size()));
    std::vector<C> b(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        if (!pf.terms[i].b_squared)
            raise(ErrorKind::NotEnoughTerms, "coupling b^2 of term " + std::to_string(i) + " is unknown");
        b[i] = detail::sqrt_scalar<C>(*pf.terms[i].b_squared);
    }
    std::vector<C> P{C(1)}, Q{C(0)};
    if (depth == 0) return {P, Q};
    P.push_back(pf.terms[0].p(lambda) / b[0]);
    Q.push_back(C(pf.terms[0].epsilon) / b[0]);
    for (std::size_t j = 1; j < depth; ++j) {
        const C pj = pf.terms[j].p(lambda);
        const C back = C(pf.terms[j - 1].epsilon * pf.terms[j].epsilon) * b[j - 1];
        P.push_back((pj * P[j] - back * P[j - 1]) / b[j]);
        Q.push_back((pj * Q[j] - back * Q[j - 1]) / b[j]);
    }
    return {P, Q};
}

/// 2x2 matrix of polynomials.
template <class T>
struct TransferMatrix {
    std::array<std::array<Polynomial<T>, 2>, 2> entry;

    Polynomial<T> det() const { return entry[0][0] * entry[1][1] - entry[0][1] * entry[1][0]; }
    Polynomial<T> trace() const { return entry[0][0] + entry[1][1]; }

    friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
        TransferMatrix c;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) c.entry[i][k] = a.entry[i][0] * b.entry[0][k] + a.entry[i][1] * b.entry[1][k];
        return c;
    }

    template <class C>
    std::array<std::array<C, 2>, 2> operator()(const C& lambda) const {
        return {{{entry[0][0](lambda), entry[0][1](lambda)}, {entry[1][0](lambda), entry[1][1](lambda)}}};
    }
};

/// W_j = [[0, -eps_j/b_j], [eps_j b_j, p_j/b_j]] with real coefficients.
template <class T>
TransferMatrix<double> transfer_matrix(const PFractionTerm<T>& term) {
    if (!term.b_squared) raise(ErrorKind::NotEnoughTerms, "transfer matrix needs b^2");
    const double b = std::sqrt(ring_traits<T>::to_double(*term.b_squared));
    const double eps = term.epsilon;
    TransferMatrix<double> w;
    w.entry[0][0] = {};
    w.entry[0][1] = Polynomial<double>::constant(-eps / b);
    w.entry[1][0] = Polynomial<double>::constant(eps * b);
    w.entry[1][1] = term.p.template map<double>([](const T& c) { return ring_traits<T>::to_double(c); }) / b;
    return w;
}

/// W_{[0,j]} = W_0 ... W_j. Columns: (-eps_j b_j Q_j, eps_j b_j P_j), (-Q_{j+1}, P_{j+1}).
template <class T>
TransferMatrix<double> transfer_product(const PFraction<T>& pf, std::size_t j) {
    if (pf.size() < j + 1) raise(ErrorKind::NotEnoughTerms, "transfer product needs " + std::to_string(j + 1) + " terms");
    TransferMatrix<double> w = transfer_matrix(pf.terms[0]);
    for (std::size_t i = 1; i <= j; ++i) w = w * transfer_matrix(pf.terms[i]);
    return w;
}

/// Exact product of b_i W_i = [[0, -eps_i], [eps_i b_i^2, p_i]], i.e.
/// (b_0...b_j) W_{[0,j]}, with determinant prod_{i<=j} b_i^2.
template <class T>
TransferMatrix<T> scaled_transfer_product(const PFraction<T>& pf, std::size_t j) {
    if (pf.size() < j + 1) raise(ErrorKind::NotEnoughTerms, "transfer product needs " + std::to_string(j + 1) + " terms");
    TransferMatrix<T> acc;
    for (std::size_t i = 0; i <= j; ++i) {
        const auto& term = pf.terms[i];
        if (!term.b_squared) raise(ErrorKind::NotEnoughTerms, "transfer matrix needs b^2");
        TransferMatrix<T> w;
        w.entry[0][1] = Polynomial<T>::constant(T(-term.epsilon));
        w.entry[1][0] = Polynomial<T>::constant(T(term.epsilon) * *term.b_squared);
        w.entry[1][1] = term.p;
        acc = i == 0 ? w : acc * w;
    }
    return acc;
}

/// |eps_j b_j (Q_{j+1} P_j - Q_j P_{j+1}) - 1| evaluated at lambda.
template <class C, class T>
double lo_defect(const OrthoSequences<T>& seqs, std::size_t j, const C& lambda) {
    if (j + 1 > seqs.depth()) raise(ErrorKind::OutOfRange, "index " + std::to_string(j + 1) + " beyond generated depth");
    const auto& term = seqs.source.terms[j];
    if (!term.b_squared) raise(ErrorKind::OutOfRange, "coupling of term " + std::to_string(j) + " unknown");
    const auto [pj, qj] = eval_normalized(seqs, j, lambda);
    const auto [pj1, qj1] = eval_normalized(seqs, j + 1, lambda);
    const C b = detail::sqrt_scalar<C>(*term.b_squared);
    const C value = C(term.epsilon) * b * (qj1 * pj - qj * pj1) - C(1);
    using std::abs;
    return static_cast<double>(abs(value));
}

/// eps_j (Qhat_{j+1} Phat_j - Qhat_j Phat_{j+1}) - prod_{i<j} b_i^2; the zero
/// polynomial whenever the recurrence is right.
template <class T>
Polynomial<T> lo_residual(const OrthoSequences<T>& seqs, std::size_t j) {
    if (j + 1 > seqs.depth()) raise(ErrorKind::OutOfRange, "index " + std::to_string(j + 1) + " beyond generated depth");
    const int eps = seqs.source.terms[j].epsilon;
    Polynomial<T> lhs = (seqs.q_hat[j + 1] * seqs.p_hat[j] - seqs.q_hat[j] * seqs.p_hat[j + 1]) * T(eps);
    return lhs - Polynomial<T>::constant(*seqs.b2_products[j]);
}

template <class T>
struct CoprimalityReport {
    Polynomial<T> gcd_p;   // gcd(Phat_j, Phat_{j+1})
    Polynomial<T> gcd_q;   // gcd(Qhat_j, Qhat_{j+1})
    Polynomial<T> gcd_pq;  // gcd(Phat_j, Qhat_j)
    T resultant_p, resultant_q, resultant_pq;

    bool coprime() const { return gcd_p.degree() == 0 && gcd_q.degree() == 0 && gcd_pq.degree() == 0; }
};

template <class T>
CoprimalityReport<T> coprimality_check(const OrthoSequences<T>& seqs, std::size_t j) {
    if (j == 0 || j + 1 > seqs.depth()) raise(ErrorKind::OutOfRange, "coprimality needs 1 <= j < depth");
    CoprimalityReport<T> r;
    r.gcd_p = gcd(seqs.p_hat[j], seqs.p_hat[j + 1]);
    r.gcd_q = gcd(seqs.q_hat[j], seqs.q_hat[j + 1]);
    r.gcd_pq = gcd(seqs.p_hat[j], seqs.q_hat[j]);
    r.resultant_p = resultant(seqs.p_hat[j], seqs.p_hat[j + 1]);
    r.resultant_q = resultant(seqs.q_hat[j], seqs.q_hat[j + 1]);
    r.resultant_pq = resultant(seqs.p_hat[j], seqs.q_hat[j]);
    return r;
}

}  // namespace gjac

#endif  // GJAC_POLYREC_HPP
