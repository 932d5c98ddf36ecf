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

#ifndef GJAC_PADE_HPP
#define GJAC_PADE_HPP

// Diagonal Pade approximants f^{[n_j/n_j]} = -Qhat_j / Phat_j at infinity.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "moments.hpp"
#include "polynomial.hpp"
#include "polyrec.hpp"
#include "series.hpp"

namespace gjac {

template <class T>
struct PadeApproximant {
    Polynomial<T> numerator;    // -Qhat_j
    Polynomial<T> denominator;  // Phat_j
    std::size_t order = 0;      // n_j
    /// k_j = deg p_j when term j is known.
    std::optional<std::size_t> block_size;
    std::size_t index = 0;
    T scale = T(1);

    template <class C>
    C operator()(const C& lambda) const {
        return numerator(lambda) / denominator(lambda);
    }
};

template <class T>
PadeApproximant<T> diagonal(const OrthoSequences<T>& seqs, std::size_t j) {
    if (j == 0 || j > seqs.depth()) raise(ErrorKind::OutOfRange, "diagonal index must lie in 1.." + std::to_string(seqs.depth()));
    PadeApproximant<T> a;
    a.numerator = -seqs.q_hat[j];
    a.denominator = seqs.p_hat[j];
    a.order = static_cast<std::size_t>(seqs.p_hat[j].degree());
    if (j < seqs.source.size()) a.block_size = seqs.source.terms[j].degree();
    a.index = j;
    a.scale = seqs.source.scale;
    return a;
}

/// Largest i such that the Laurent coefficients of the approximant, scaled back to
/// the raw moments, agree with s_0..s_i; -1 when s_0 already differs.
template <class T>
long match_order(const PadeApproximant<T>& appr, const MomentSequence<T>& s) {
    const std::size_t need = 2 * appr.order + appr.block_size.value_or(0);
    if (s.size() < need)
        raise(ErrorKind::InsufficientMoments,
              "match order needs " + std::to_string(need) + " moments, have " + std::to_string(s.size()));
    const std::vector<T> c = laurent_at_infinity(appr.numerator, appr.denominator, s.size());
    const T norm = s.max_norm();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const T predicted = T(-c[i] * appr.scale);
        if constexpr (ring_traits<T>::exact) {
            if (predicted != s[i]) return static_cast<long>(i) - 1;
        } else {
            if (std::abs(predicted - s[i]) > 1e-10 * std::max(norm, 1.0)) return static_cast<long>(i) - 1;
        }
    }
    return static_cast<long>(s.size()) - 1;
}

enum class BlockVerdict { coincides, not_exist, outside };

inline const char* to_string(BlockVerdict v) {
    switch (v) {
        case BlockVerdict::coincides: return "coincides";
        case BlockVerdict::not_exist: return "not_exist";
        case BlockVerdict::outside: return "outside";
    }
    return "outside";
}

struct BlockCell {
    std::size_t L = 0, M = 0;
    BlockVerdict verdict = BlockVerdict::outside;
};

/// Cells (L, M) around the normal index n_j with block size k_j:
/// coincide with [n_j/n_j] when L, M >= n_j and L + M <= 2 n_j + k_j - 1;
/// do not exist when L, M <= n_j + k_j - 1 and L + M >= 2 n_j + k_j.
inline std::vector<BlockCell> block_table(std::size_t n, std::size_t k, std::size_t L_max, std::size_t M_max) {
    if (k == 0) raise(ErrorKind::OutOfRange, "block size must be positive");
    std::vector<BlockCell> cells;
    for (std::size_t L = 0; L <= L_max; ++L)
        for (std::size_t M = 0; M <= M_max; ++M) {
            BlockVerdict v = BlockVerdict::outside;
            if (L >= n && M >= n && L + M <= 2 * n + k - 1)
                v = BlockVerdict::coincides;
            else if (L <= n + k - 1 && M <= n + k - 1 && L + M >= 2 * n + k)
                v = BlockVerdict::not_exist;
            cells.push_back({L, M, v});
        }
    return cells;
}

struct ConvergenceRow {
    std::size_t j = 0;
    std::size_t n = 0;
    std::optional<Complex> value;  // empty at a pole
    std::optional<double> abs_error;
    std::optional<long> match_order;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    /// Least-squares slope of log error against j over the last half of the
    /// finite entries, exponentiated.
    std::optional<double> ratio;
};

template <class T>
ConvergenceTable convergence_run(const OrthoSequences<T>& seqs, const Complex& lambda, const std::vector<std::size_t>& js,
                                 const std::function<Complex(Complex)>& reference,
                                 const MomentSequence<T>* moments = nullptr, double pole_tol = 1e-13) {
    ConvergenceTable table;
    for (std::size_t j : js) {
        const PadeApproximant<T> a = diagonal(seqs, j);
        ConvergenceRow row;
        row.j = j;
        row.n = a.order;
        const Complex den = a.denominator(lambda);
        double bound = 0.0;
        for (auto it = a.denominator.coeffs().rbegin(); it != a.denominator.coeffs().rend(); ++it)
            bound = bound * std::abs(lambda) + std::abs(ring_traits<T>::to_double(*it));
        if (std::abs(den) > pole_tol * bound) {
            row.value = a.numerator(lambda) / den;
            if (reference) row.abs_error = std::abs(*row.value - reference(lambda));
        }
        if (moments && moments->size() >= 2 * a.order + a.block_size.value_or(0)) row.match_order = match_order(a, *moments);
        table.rows.push_back(row);
    }
    std::vector<double> xs, ys;
    for (const auto& r : table.rows)
        if (r.abs_error && *r.abs_error > 0.0) {
            xs.push_back(static_cast<double>(r.j));
            ys.push_back(std::log(*r.abs_error));
        }
    const std::size_t start = xs.size() / 2;
    if (xs.size() - start >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(xs.size() - start);
        for (std::size_t i = start; i < xs.size(); ++i) {
            sx += xs[i], sy += ys[i], sxx += xs[i] * xs[i], sxy += xs[i] * ys[i];
        }
        const double d = m * sxx - sx * sx;
        if (d != 0.0) table.ratio = std::exp((m * sxy - sx * sy) / d);
    }
    return table;
}

}  // namespace gjac

#endif  // GJAC_PADE_HPP
