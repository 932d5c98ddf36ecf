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

#ifndef GJAC_SPECTRAL_HPP
#define GJAC_SPECTRAL_HPP

// Weyl solutions W_j = Q_j + m P_j and numerical evidence for lambda in the
// resolvent set: decay |P_i W_j| <= C q^{n_j - n_i} for i <= j.
//
// The combination Q_j + m P_j cancels to many digits once |P_j| is large, so the
// default evaluation type is the 100-digit complex.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "gjmatrix.hpp"
#include "polyrec.hpp"

namespace gjac {

template <class C = Complex100>
struct WeylData {
    C lambda;
    C m_value;
    std::size_t depth = 0;
    std::vector<C> W, P, Q;
    /// max_j |eps_{j-1} eps_j b_{j-1} W_{j-1} - p_j W_j + b_j W_{j+1}| / scale_j.
    double recurrence_residual = 0.0;
    /// max_j |eps_j b_j (W_{j+1} P_j - W_j P_{j+1}) - 1|.
    double wronskian_defect = 0.0;
};

namespace detail {

template <class C>
double magnitude(const C& z) {
    using std::abs;
    return static_cast<double>(abs(z));
}

}  // namespace detail

/// W_j for j = 0..J. Needs J terms with known couplings.
template <class C = Complex100, class T>
WeylData<C> weyl_solution(const OrthoSequences<T>& seqs, const C& lambda, const C& m_value, std::size_t J) {
    const auto& pf = seqs.source;
    if (J > pf.size()) raise(ErrorKind::OutOfRange, "depth " + std::to_string(J) + " exceeds the available terms");
    for (std::size_t i = 0; i < J; ++i)
        if (!pf.terms[i].b_squared) raise(ErrorKind::OutOfRange, "coupling of term " + std::to_string(i) + " unknown");
    WeylData<C> d;
    d.lambda = lambda;
    d.m_value = m_value;
    d.depth = J;
    std::tie(d.P, d.Q) = normalized_values(pf, lambda, J);
    for (std::size_t j = 0; j <= J; ++j) d.W.push_back(d.Q[j] + m_value * d.P[j]);

    for (std::size_t j = 0; j < J; ++j) {
        const auto& t = pf.terms[j];
        const C b = detail::sqrt_scalar<C>(*t.b_squared);
        const C pj = t.p(lambda);
        const C e(t.epsilon);
        d.wronskian_defect =
            std::max(d.wronskian_defect, detail::magnitude(C(e * b * (d.W[j + 1] * d.P[j] - d.W[j] * d.P[j + 1]) - C(1))));
        if (j == 0) continue;
        const auto& prev = pf.terms[j - 1];
        const C bp = detail::sqrt_scalar<C>(*prev.b_squared);
        const C back = C(prev.epsilon * t.epsilon) * bp * d.W[j - 1];
        const C r = back - pj * d.W[j] + b * d.W[j + 1];
        const double scale = detail::magnitude(back) + detail::magnitude(C(pj * d.W[j])) + detail::magnitude(C(b * d.W[j + 1]));
        d.recurrence_residual = std::max(d.recurrence_residual, detail::magnitude(r) / std::max(scale, 1e-300));
    }
    return d;
}

/// m(lambda) approximated by the m-function of the truncation to `depth` blocks.
template <class C = Complex100, class T>
C deep_m(const PFraction<T>& pf, const C& lambda, std::size_t depth) {
    if (depth == 0 || depth > pf.size()) raise(ErrorKind::NotEnoughTerms, "deep truncation needs more terms");
    const GJMatrix<T> h = assemble(pf.prefix(depth));
    return m_truncation(h, depth - 1, lambda, 1e-30);
}

enum class SpectrumVerdict { divergent, bounded_so_far };

inline const char* to_string(SpectrumVerdict v) { return v == SpectrumVerdict::divergent ? "divergent" : "bounded_so_far"; }

struct PointSpectrumResult {
    SpectrumVerdict verdict = SpectrumVerdict::bounded_so_far;
    std::vector<double> partial_sums;  // sum_{i<=j} |P_i|^2
};

/// pi(lambda) in l^2 iff sum |P_j|^2 < infinity. Divergent when |P_j|^2 grows by
/// more than 1 + threshold at every step over the last J/2 indices.
template <class C = Complex100, class T>
PointSpectrumResult point_spectrum_test(const OrthoSequences<T>& seqs, const C& lambda, std::size_t J,
                                        double threshold = 0.05) {
    if (J < 2) raise(ErrorKind::OutOfRange, "point spectrum test needs J >= 2");
    const auto [P, Q] = normalized_values(seqs.source, lambda, J);
    PointSpectrumResult r;
    double acc = 0.0;
    std::vector<double> t;
    for (std::size_t j = 0; j <= J; ++j) {
        const double v = detail::magnitude(P[j]);
        t.push_back(v * v);
        acc += v * v;
        r.partial_sums.push_back(acc);
    }
    bool growing = true;
    for (std::size_t j = J - J / 2; j < J; ++j)
        if (!(t[j] > 0.0 && t[j + 1] > (1.0 + threshold) * t[j])) growing = false;
    r.verdict = growing ? SpectrumVerdict::divergent : SpectrumVerdict::bounded_so_far;
    return r;
}

enum class CertificateVerdict { certified_decay, inconclusive, violated };

inline const char* to_string(CertificateVerdict v) {
    switch (v) {
        case CertificateVerdict::certified_decay: return "certified_decay";
        case CertificateVerdict::inconclusive: return "inconclusive";
        case CertificateVerdict::violated: return "violated";
    }
    return "inconclusive";
}

struct CertificateOptions {
    /// Largest fitted q accepted as decay.
    double q_max = 0.9;
    /// limsup |P_j|^{1/j} must exceed this for a certified point.
    double growth_min = 1.05;
};

struct Certificate {
    Complex lambda;
    Complex m_value;
    std::size_t depth = 0;
    double C = 0.0;
    double q = 0.0;
    /// max over pairs of |P_i W_j| - C q^{n_j - n_i}; nonpositive when the envelope holds.
    double max_residual = 0.0;
    double limsup_root = 0.0;
    /// max|W| over the last third of depths divided by max|W| over the first third.
    double tail_growth = 0.0;
    CertificateVerdict verdict = CertificateVerdict::inconclusive;
};

template <class C = Complex100, class T>
Certificate resolvent_certificate(const OrthoSequences<T>& seqs, const C& lambda, const C& m_value, std::size_t J,
                                  const CertificateOptions& opt = {}) {
    if (J < 4) raise(ErrorKind::OutOfRange, "certificate needs J >= 4");
    const WeylData<C> d = weyl_solution(seqs, lambda, m_value, J);
    const std::vector<std::size_t> n = seqs.source.prefix(J).normal_indices();

    std::vector<double> p(J + 1), w(J + 1);
    for (std::size_t j = 0; j <= J; ++j) p[j] = detail::magnitude(d.P[j]), w[j] = detail::magnitude(d.W[j]);

    Certificate cert;
    cert.lambda = scalar_cast<Complex>(lambda);
    cert.m_value = scalar_cast<Complex>(m_value);
    cert.depth = J;
    for (std::size_t i = 0; i <= J; ++i)
        for (std::size_t j = i; j <= J; ++j) cert.C = std::max(cert.C, p[i] * w[j]);
    if (cert.C > 0.0) {
        for (std::size_t i = 0; i <= J; ++i)
            for (std::size_t j = i + 1; j <= J; ++j) {
                if (n[j] == n[i]) continue;
                const double ratio = p[i] * w[j] / cert.C;
                cert.q = std::max(cert.q, std::pow(ratio, 1.0 / static_cast<double>(n[j] - n[i])));
            }
        cert.max_residual = -HUGE_VAL;
        for (std::size_t i = 0; i <= J; ++i)
            for (std::size_t j = i; j <= J; ++j)
                cert.max_residual = std::max(
                    cert.max_residual, p[i] * w[j] - cert.C * std::pow(cert.q, static_cast<double>(n[j] - n[i])));
    }
    for (std::size_t j = std::max<std::size_t>(1, J - J / 2); j <= J; ++j)
        cert.limsup_root = std::max(cert.limsup_root, std::pow(p[j], 1.0 / static_cast<double>(j)));

    const std::size_t third = std::max<std::size_t>(1, (J + 1) / 3);
    double head = 0.0, tail = 0.0;
    for (std::size_t j = 0; j < third; ++j) head = std::max(head, w[j]);
    for (std::size_t j = J + 1 - third; j <= J; ++j) tail = std::max(tail, w[j]);
    cert.tail_growth = head > 0.0 ? tail / head : HUGE_VAL;

    if (cert.tail_growth >= 1.0)
        cert.verdict = CertificateVerdict::violated;
    else if (cert.q <= opt.q_max && cert.limsup_root >= opt.growth_min)
        cert.verdict = CertificateVerdict::certified_decay;
    else
        cert.verdict = CertificateVerdict::inconclusive;
    return cert;
}

struct ResolventColumn {
    std::vector<Complex> x;
    /// ||(H - lambda) x - e_{j,k}|| over rows at least one block inside the cut.
    double interior_residual = 0.0;
    /// Same norm over every row of the truncation.
    double full_residual = 0.0;
};

/// x(j,k) = e_{j,k-1} + lambda e_{j,k-2} + ... + lambda^k x(j,0) with
/// x(j,0) = -P_j xi_{[0,j]} + Q_j pi_{[0,j]} + P_j (xi + m pi), on `trunc` blocks.
template <class C = Complex100, class T>
ResolventColumn formal_resolvent_column(const OrthoSequences<T>& seqs, const GJMatrix<T>& h, const C& lambda,
                                        const C& m_value, std::size_t j, std::size_t k, std::size_t trunc) {
    if (j >= h.block_count() || k >= h.blocks[j].size()) raise(ErrorKind::BadIndex, "no basis vector e_{j,k}");
    if (trunc < j + 2 || trunc > h.block_count())
        raise(ErrorKind::TruncationTooShallow, "truncation must extend at least one block past j");
    const auto [P, Q] = normalized_values(seqs.source, lambda, trunc);
    const std::vector<std::size_t> off = h.offsets();
    const std::size_t dim = off[trunc];

    // Stacked P_{i,l} = lambda^l P_i and Q_{i,l}, then G^{-1} = eps_i E_i blockwise.
    auto stacked = [&](const std::vector<C>& v, std::size_t blocks) {
        std::vector<C> out(dim, C(0));
        for (std::size_t i = 0; i < blocks; ++i) {
            const auto& blk = h.blocks[i];
            std::vector<C> raw(blk.size());
            C pw(1);
            for (std::size_t l = 0; l < blk.size(); ++l, pw *= lambda) raw[l] = pw * v[i];
            for (std::size_t r = 0; r < blk.size(); ++r) {
                C acc(0);
                for (std::size_t c = 0; c < blk.size(); ++c)
                    if (blk.E(r, c) != T(0)) acc += scalar_cast<C>(blk.E(r, c)) * raw[c];
                out[off[i] + r] = C(h.signs[i]) * acc;
            }
        }
        return out;
    };
    std::vector<C> W(trunc);
    for (std::size_t i = 0; i < trunc; ++i) W[i] = Q[i] + m_value * P[i];
    const std::vector<C> xi_j = stacked(Q, j + 1), pi_j = stacked(P, j + 1), weyl = stacked(W, trunc);

    std::vector<C> x(dim);
    C lk(1);
    for (std::size_t l = 0; l < k; ++l) lk *= lambda;
    for (std::size_t r = 0; r < dim; ++r) x[r] = lk * (-P[j] * xi_j[r] + Q[j] * pi_j[r] + P[j] * weyl[r]);
    C pw(1);
    for (std::size_t l = k; l-- > 0; pw *= lambda) x[off[j] + l] += pw;

    const Matrix<double> m = truncation(h, 0, trunc - 1);
    ResolventColumn out;
    double interior = 0.0, full = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        C acc = -lambda * x[r];
        for (std::size_t c = 0; c < dim; ++c)
            if (m(r, c) != 0.0) acc += C(m(r, c)) * x[c];
        if (r == off[j] + k) acc -= C(1);
        const double a = detail::magnitude(acc);
        full += a * a;
        if (r < off[trunc - 1]) interior += a * a;
    }
    out.interior_residual = std::sqrt(interior);
    out.full_residual = std::sqrt(full);
    for (const auto& v : x) out.x.push_back(scalar_cast<Complex>(v));
    return out;
}

}  // namespace gjac

#endif  // GJAC_SPECTRAL_HPP
