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

#ifndef GJAC_PFRACTION_HPP
#define GJAC_PFRACTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "moments.hpp"
#include "polynomial.hpp"
#include "series.hpp"

namespace gjac {

/// One level -eps / (p(lambda) + eps b^2 (...)) of a P-fraction. b^2 is absent
/// when the data never determined it (the remainder after this level vanished or
/// ran out).
template <class T>
struct PFractionTerm {
    int epsilon = 1;
    std::optional<T> b_squared;
    Polynomial<T> p;

    std::size_t degree() const { return static_cast<std::size_t>(p.degree()); }

    friend bool operator==(const PFractionTerm& a, const PFractionTerm& b) {
        return a.epsilon == b.epsilon && a.b_squared == b.b_squared && a.p == b.p;
    }
};

enum class PFractionStatus { open, terminated, exhausted };

inline const char* to_string(PFractionStatus s) {
    switch (s) {
        case PFractionStatus::open: return "open";
        case PFractionStatus::terminated: return "terminated";
        case PFractionStatus::exhausted: return "exhausted";
    }
    return "open";
}

inline PFractionStatus parse_status(const std::string& s) {
    if (s == "open") return PFractionStatus::open;
    if (s == "terminated") return PFractionStatus::terminated;
    if (s == "exhausted") return PFractionStatus::exhausted;
    raise(ErrorKind::Parse, "unknown P-fraction status '" + s + "'");
}

template <class T>
struct PFraction {
    std::vector<PFractionTerm<T>> terms;
    PFractionStatus status = PFractionStatus::open;
    std::size_t degree_cap = 0;
    /// Normalization factor of the moments the fraction was expanded from.
    T scale = T(1);

    std::size_t size() const noexcept { return terms.size(); }
    bool empty() const noexcept { return terms.empty(); }

    /// n_0 = 0, n_j = k_0 + ... + k_{j-1}, for j = 0..size().
    std::vector<std::size_t> normal_indices() const {
        std::vector<std::size_t> n{0};
        for (const auto& t : terms) n.push_back(n.back() + t.degree());
        return n;
    }

    /// Largest block degree among the terms.
    std::size_t max_degree() const {
        std::size_t m = 0;
        for (const auto& t : terms) m = std::max(m, t.degree());
        return m;
    }

    /// First `count` terms of the same fraction.
    PFraction prefix(std::size_t count) const {
        PFraction out = *this;
        if (count < terms.size()) {
            out.terms.resize(count);
            out.status = PFractionStatus::open;
        }
        return out;
    }

    /// Repeats the first `period` terms cyclically until `count` terms exist.
    PFraction periodic_extension(std::size_t period, std::size_t count) const {
        if (period == 0 || period > terms.size()) raise(ErrorKind::NotPeriodic, "period exceeds the available terms");
        PFraction out = *this;
        out.terms.clear();
        for (std::size_t j = 0; j < count; ++j) out.terms.push_back(terms[j % period]);
        out.status = PFractionStatus::open;
        return out;
    }
};

template <class T>
struct ExpansionStep {
    PFractionTerm<T> term;
    /// Normalized moments of the remainder; depth = input depth - 2k.
    MomentSequence<T> next;
    /// The remainder vanished through all known coefficients.
    bool remainder_vanished = false;
};

/// One level of the expansion: -1/phi = eps p(lambda) + b^2 phi_1.
template <class T>
ExpansionStep<T> expand_step(const MomentSequence<T>& tail) {
    const T norm = tail.max_norm();
    const std::size_t lead = first_nonzero(tail.coeffs, norm);
    if (lead == tail.size()) raise(ErrorKind::AllZero, "tail vanishes identically");
    const std::size_t k = lead + 1;
    if (tail.size() < 2 * k)
        raise(ErrorKind::InsufficientMoments, "block of degree " + std::to_string(k) + " needs " +
                                                  std::to_string(2 * k) + " moments, have " +
                                                  std::to_string(tail.size()));
    const T& head = tail.coeffs[lead];
    if constexpr (ring_traits<T>::exact) {
        if (ring_traits<T>::abs(head) != 1) raise(ErrorKind::NotNormalized, "leading moment must be +1 or -1");
    } else {
        if (std::abs(std::abs(head) - 1.0) > 1e-12) raise(ErrorKind::NotNormalized, "leading moment must be +1 or -1");
    }
    const int eps = head > 0 ? 1 : -1;

    // phi = -x^k S(x) with S(0) = eps, so -1/phi = lambda^k R(x), R = 1/S.
    const std::vector<T> shifted(tail.coeffs.begin() + static_cast<std::ptrdiff_t>(lead), tail.coeffs.end());
    const std::vector<T> r = series_reciprocal(shifted, shifted.size());

    std::vector<T> p(k + 1);
    for (std::size_t m = 0; m <= k; ++m) p[k - m] = eps > 0 ? r[m] : T(-r[m]);
    if constexpr (!ring_traits<T>::exact) p[k] = 1.0;

    std::vector<T> rest(r.begin() + static_cast<std::ptrdiff_t>(k + 1), r.end());
    ExpansionStep<T> out;
    out.term.epsilon = eps;
    out.term.p = Polynomial<T>(std::move(p));

    T rest_norm(0);
    for (const T& v : r) rest_norm = std::max(rest_norm, ring_traits<T>::abs(v));
    const std::size_t first = first_nonzero(rest, rest_norm);
    if (first == rest.size()) {
        out.remainder_vanished = true;
        for (T& v : rest) v = T(0);
        out.next = MomentSequence<T>(std::move(rest), T(1), false);
        return out;
    }
    const T b2 = ring_traits<T>::abs(rest[first]);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i < first ? T(0) : T(-rest[i] / b2);
    out.term.b_squared = b2;
    out.next = MomentSequence<T>(std::move(rest), T(1), true);
    return out;
}

/// Expands normalized moments into a P-fraction, consuming 2k_j moments per level.
template <class T>
PFraction<T> expand(const MomentSequence<T>& s, std::size_t max_terms, std::size_t degree_cap) {
    MomentSequence<T> tail = normalize(s);  // AllZero on a vanishing input
    PFraction<T> pf;
    pf.degree_cap = degree_cap;
    pf.scale = tail.scale;
    pf.status = PFractionStatus::open;
    while (pf.terms.size() < max_terms) {
        const std::size_t lead = first_nonzero(tail.coeffs, tail.max_norm());
        if (lead == tail.size()) {
            pf.status = PFractionStatus::exhausted;
            return pf;
        }
        if (lead + 1 > degree_cap)
            raise(ErrorKind::DegreeCapExceeded, "block degree " + std::to_string(lead + 1) + " exceeds cap " +
                                                    std::to_string(degree_cap));
        if (tail.size() < 2 * (lead + 1)) {
            pf.status = PFractionStatus::exhausted;
            return pf;
        }
        ExpansionStep<T> step = expand_step(tail);
        pf.terms.push_back(std::move(step.term));
        tail = std::move(step.next);
        if (step.remainder_vanished) {
            pf.status = tail.size() >= 2 ? PFractionStatus::terminated : PFractionStatus::exhausted;
            return pf;
        }
    }
    return pf;
}

template <class T>
struct ReconstructedMoments {
    MomentSequence<T> moments;
    /// Entries with index < certified agree with every function sharing this prefix.
    std::size_t certified = 0;
};

/// Laurent coefficients at infinity of the finite composition of the terms,
/// de-normalized by pf.scale.
template <class T>
ReconstructedMoments<T> to_moments(const PFraction<T>& pf, std::size_t count) {
    if (pf.empty()) raise(ErrorKind::EmptyPFraction, "no terms to evaluate");
    if (count == 0) raise(ErrorKind::OutOfRange, "count must be positive");
    const std::size_t len = count + 1;  // powers x^0..x^count
    std::vector<T> m(len, T(0));       // tail function, O(x^k) at each level
    for (std::size_t j = pf.size(); j-- > 0;) {
        const auto& term = pf.terms[j];
        const std::size_t k = term.degree();
        std::vector<T> den = reversed(term.p);
        den.resize(len, T(0));
        if (j + 1 < pf.size()) {
            if (!term.b_squared)
                raise(ErrorKind::NotEnoughTerms, "coupling b^2 of term " + std::to_string(j) + " is unknown");
            const T coupling = T(term.epsilon) * *term.b_squared;
            for (std::size_t i = 0; i + k < len; ++i) den[i + k] += coupling * m[i];
        }
        std::vector<T> inv = series_reciprocal(den, len);
        std::vector<T> next(len, T(0));
        for (std::size_t i = 0; i + k < len; ++i) next[i + k] = T(-term.epsilon) * inv[i];
        m = std::move(next);
    }
    std::vector<T> s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = T(-m[i + 1]) * pf.scale;
    ReconstructedMoments<T> out;
    out.moments = MomentSequence<T>(std::move(s), T(1), false);
    const std::size_t n_last = pf.normal_indices().back();
    out.certified = pf.status == PFractionStatus::terminated ? count : std::min(count, 2 * n_last);
    return out;
}

}  // namespace gjac

#endif  // GJAC_PFRACTION_HPP
