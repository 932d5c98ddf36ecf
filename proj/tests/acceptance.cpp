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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <gjac/gjac.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace gjac;
using namespace gjac::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "failed: " << what << "; ";
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Complex100 c100(const Complex& z) { return Complex100(Real100(z.real()), Real100(z.imag())); }

Complex100 catalan_m(const Complex100& z) {
    using boost::multiprecision::sqrt;
    Complex100 w = (-z + sqrt(z * z - Complex100(4))) / Complex100(2);
    if (abs(w) > 1) w = (-z - sqrt(z * z - Complex100(4))) / Complex100(2);
    return w;
}

double distance_to_cross(const Complex& z) {
    const double to_real = std::hypot(std::max(0.0, std::abs(z.real()) - 1.0), z.imag());
    const double to_imag = std::hypot(z.real(), std::max(0.0, std::abs(z.imag()) - 1.0));
    return std::min(to_real, to_imag);
}

void cross_scan(Outcome& o) {
    const auto t0 = Clock::now();
    const Monodromy mono = monodromy(make_periodic(cross_pf(1), 1));
    const SpectrumScan s = scan(mono, Region{-2, 2, -2, 2}, 400, 400, 1e-3);
    const double elapsed = seconds_since(t0);
    std::vector<Complex> e;
    for (const auto& p : s.points)
        if (p.label == SpectrumLabel::E) e.push_back(p.lambda);
    o.require(!e.empty(), "E nonempty");
    double forward = 0.0, backward = 0.0;
    for (const auto& z : e) forward = std::max(forward, distance_to_cross(z));
    for (int i = 0; i <= 2000 && !e.empty(); ++i) {
        const double t = -1.0 + i / 1000.0;
        for (const Complex c : {Complex(t, 0.0), Complex(0.0, t)}) {
            double best = HUGE_VAL;
            for (const auto& z : e) best = std::min(best, std::abs(z - c));
            backward = std::max(backward, best);
        }
    }
    const double hausdorff = std::max(forward, backward);
    o.require(hausdorff <= 0.02, "Hausdorff distance <= 0.02");
    o.require(s.count(SpectrumLabel::E_p) == 0 && s.ep_roots.empty(), "no E_p points");
    o.require(elapsed < 10.0, "runtime < 10 s");
    o.detail << "E points " << e.size() << ", Hausdorff " << hausdorff << ", E_p " << s.count(SpectrumLabel::E_p)
             << ", scan " << elapsed << " s";
}

void liouville_ostrogradsky(Outcome& o) {
    Random rng(2024);
    double worst_float = 0.0, worst_relative = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const PFraction<Q> pf = rng.pfraction(21, 3);
        const OrthoSequences<Q> seqs = generate(pf, 21);
        for (std::size_t j = 0; j <= 20; ++j) o.require(lo_residual(seqs, j).is_zero(), "exact identity");
        for (int k = 0; k < 10; ++k) {
            const Complex z = std::polar(rng.real(0.0, 4.0), rng.real(0.0, 2 * std::numbers::pi));
            for (std::size_t j = 0; j <= 20; ++j) {
                worst_float = std::max(worst_float, lo_defect(seqs, j, c100(z)));
                const auto [pj, qj] = eval_normalized(seqs, j, z);
                const auto [pk, qk] = eval_normalized(seqs, j + 1, z);
                const double b = std::sqrt(static_cast<double>(*pf.terms[j].b_squared));
                const double size = b * (std::abs(qk * pj) + std::abs(qj * pk));
                worst_relative = std::max(worst_relative, lo_defect(seqs, j, z) / std::max(1.0, size));
            }
        }
    }
    o.require(worst_float <= 1e-10, "float defect <= 1e-10");
    o.detail << "exact j<=20 on 50 fractions; 100-digit defect " << worst_float << " (gating), double relative defect "
             << worst_relative;
}

void charpoly_oracle(Outcome& o) {
    Random rng(2025);
    double elapsed = 0.0;
    std::size_t cofactor_checks = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const PFraction<Q> pf = rng.pfraction(10, 3);
        const GJMatrix<Q> h = assemble(pf);
        const OrthoSequences<Q> seqs = generate(pf, 10);
        const Q e0(pf.terms[0].epsilon);
        for (std::size_t j = 0; j <= 8; ++j) {
            const auto t0 = Clock::now();
            const PolyQ full = truncation_charpoly(h, 0, j);
            const PolyQ tail = j >= 1 ? truncation_charpoly(h, 1, j) : PolyQ::constant(Q(1));
            elapsed += seconds_since(t0);
            o.require(full == seqs.p_hat[j + 1], "charpoly = Phat_{j+1}");
            if (j >= 1) o.require(tail == seqs.q_hat[j + 1] * e0, "charpoly = eps0 Qhat_{j+1}");
            const Matrix<Q> m = scaled_truncation(h, 0, j);
            if (m.rows() <= 7) {
                const Q x = rng.small_rational();
                Matrix<Q> shifted = m;
                for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) = x - m(i, i);
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t k = 0; k < m.rows(); ++k)
                        if (i != k) shifted(i, k) = -m(i, k);
                o.require(oracle::cofactor_det(shifted) == full(x), "cofactor determinant");
                ++cofactor_checks;
            }
        }
    }
    o.require(elapsed < 5.0, "runtime < 5 s");
    o.detail << "25 fractions, j<=8, " << cofactor_checks << " cofactor checks, charpoly time " << elapsed << " s";
}

void pade_matching(Outcome& o) {
    Random rng(2026);
    std::size_t diagonals = 0, hankel = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const PFraction<Q> source = rng.pfraction(11, 3);
        const std::size_t count = 2 * source.normal_indices().back();
        const MomentSequence<Q> s = to_moments(source, count).moments;
        const PFraction<Q> pf = expand(s, 11, 3);
        o.require(pf.size() == 11, "pipeline reproduces 11 terms");
        if (pf.size() < 11) continue;
        const auto n = pf.normal_indices();
        const OrthoSequences<Q> seqs = generate(pf, 10);
        for (std::size_t j = 1; j <= 10; ++j) {
            const PadeApproximant<Q> a = diagonal(seqs, j);
            const long bound = static_cast<long>(2 * n[j] - 2 + pf.terms[j].degree());
            o.require(match_order(a, s) >= bound, "match_order >= 2n_j - 2 + k_j");
            ++diagonals;
            if (n[j] <= 16) {
                const auto r = oracle::hankel_pade(s.coeffs, n[j]);
                o.require(r.numerator * a.denominator == a.numerator * a.scale * r.denominator, "Hankel oracle");
                ++hankel;
            }
        }
    }
    o.detail << diagonals << " diagonals checked, " << hankel << " against the Hankel system";
}

void convergence_rate(Outcome& o) {
    const OrthoSequences<Q> seqs = generate(catalan_pf(14), 13);
    auto reference = [](Complex z) { return scalar_cast<Complex>(catalan_m(c100(z))); };
    std::vector<std::size_t> js;
    for (std::size_t j = 4; j <= 12; ++j) js.push_back(j);
    const ConvergenceTable t = convergence_run(seqs, Complex(3.0), js, reference);
    o.require(t.ratio && *t.ratio >= 0.12 && *t.ratio <= 0.18, "ratio in [0.12, 0.18]");
    const ConvergenceTable two = convergence_run(seqs, Complex(3.0), {2}, reference);
    const double err = two.rows[0].abs_error.value_or(HUGE_VAL);
    o.require(std::abs(err - 0.00697) <= 1e-4, "|f[2/2](3) - m(3)| = 0.00697 +- 1e-4");
    o.detail << "ratio " << t.ratio.value_or(NAN) << ", [2/2] error " << err;
}

void certificates(Outcome& o) {
    const Complex100 three = c100(Complex(3.0));
    const Certificate a = resolvent_certificate(generate(catalan_pf(41), 40), three, catalan_m(three), 40);
    o.require(a.verdict == CertificateVerdict::certified_decay, "Catalan at 3 certified");
    o.require(a.q >= 0.35 && a.q <= 0.42, "q in [0.35, 0.42]");

    const PFraction<Q> deep = catalan_pf(161);
    const Certificate b = resolvent_certificate(generate(deep, 40), c100(Complex(0.5)),
                                                deep_m(deep, c100(Complex(0.5, 1e-12)), 160), 40);
    o.require(b.verdict != CertificateVerdict::certified_decay, "Catalan at 0.5 not certified");

    const PFraction<Q> ex = cross_pf(161);
    const Complex100 z = c100(Complex(1.0, 1.0));
    const Certificate c = resolvent_certificate(generate(ex, 40), z, deep_m(ex, z, 160), 40);
    o.require(c.verdict == CertificateVerdict::certified_decay, "cross operator at 1+i certified");
    o.detail << "Catalan 3: " << to_string(a.verdict) << " q=" << a.q << "; Catalan 0.5: " << to_string(b.verdict)
             << "; cross 1+i: " << to_string(c.verdict) << " q=" << c.q;
}

void round_trips(Outcome& o) {
    Random rng(2027);
    int sequences = 0;
    while (sequences < 25) {
        const MomentSequence<Q> s(rng.rationals(12));
        if (s.max_norm() == 0) continue;
        ++sequences;
        const PFraction<Q> pf = expand(s, 100, 12);
        const std::size_t certified = to_moments(pf, s.size()).certified;
        const auto back = moments_from_matrix(assemble(pf), certified);
        for (std::size_t i = 0; i < certified; ++i) o.require(back[i] == s[i], "moments through the matrix");
    }
    for (int trial = 0; trial < 25; ++trial) {
        const PFraction<Q> pf = rng.pfraction(static_cast<std::size_t>(rng.integer(1, 6)), 3);
        const std::size_t count = 2 * pf.normal_indices().back() + 2;
        const PFraction<Q> back = expand(to_moments(pf, count).moments, pf.size(), 3);
        o.require(back.size() == pf.size(), "term count");
        if (back.size() != pf.size()) continue;
        for (std::size_t j = 0; j < pf.size(); ++j) {
            o.require(back.terms[j].epsilon == pf.terms[j].epsilon && back.terms[j].p == pf.terms[j].p, "terms");
            if (j + 1 < pf.size()) o.require(back.terms[j].b_squared == pf.terms[j].b_squared, "couplings");
        }
    }
    o.detail << "25 moment sequences and 25 fractions";
}

void structural(Outcome& o) {
    Random rng(2028);
    for (std::size_t k = 1; k <= 8; ++k)
        for (int t = 0; t < 5; ++t) {
            const CompanionBlock<Q> blk = companion(rng.monic(k, 3));
            o.require(blk.C * blk.E == blk.E * blk.C.transpose(), "C E = E C^T");
        }
    std::size_t gcd_checks = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const PFraction<Q> pf = rng.pfraction(9, 3);
        Q product(1);
        for (std::size_t j = 0; j <= 8; ++j) {
            product *= *pf.terms[j].b_squared;
            o.require(scaled_transfer_product(pf, j).det() == PolyQ::constant(product), "det W = 1");
        }
        const OrthoSequences<Q> seqs = generate(pf, 8);
        for (std::size_t j = 1; j < 8; ++j) {
            const CoprimalityReport<Q> r = coprimality_check(seqs, j);
            o.require(r.coprime(), "coprime");
            o.require(r.gcd_p == oracle::euclid_gcd(seqs.p_hat[j], seqs.p_hat[j + 1]) &&
                          r.gcd_q == oracle::euclid_gcd(seqs.q_hat[j], seqs.q_hat[j + 1]) &&
                          r.gcd_pq == oracle::euclid_gcd(seqs.p_hat[j], seqs.q_hat[j]),
                      "gcds agree with Euclid");
            ++gcd_checks;
        }
    }
    o.detail << "40 companion blocks, 180 transfer products, " << gcd_checks << " coprimality checks";
}

void numerical_range(Outcome& o) {
    const NumericalRange r = numerical_range_bound(assemble(catalan_pf(10)), 10, 64);
    const double bound = 2 * std::cos(std::numbers::pi / 11);
    o.require(r.max_support() <= bound + 1e-6, "support <= 2 cos(pi/11) + 1e-6");
    Random rng(2029);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const GJMatrix<Q> h = assemble(rng.pfraction(9, 3));
        NumericalRange prev = numerical_range_bound(h, 1, 32);
        for (std::size_t n = 2; n <= 9; ++n) {
            const NumericalRange cur = numerical_range_bound(h, n, 32);
            for (std::size_t k = 0; k < cur.support.size(); ++k) worst = std::max(worst, prev.support[k] - cur.support[k]);
            prev = cur;
        }
    }
    o.require(worst <= 1e-9, "support monotone in n");
    o.detail << "Catalan support " << r.max_support() << " vs " << bound << ", largest decrease " << worst;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"periodic spectrum of the quarter-coupled lambda^2 operator", cross_scan},
        {"Liouville-Ostrogradsky identity", liouville_ostrogradsky},
        {"characteristic polynomial oracle", charpoly_oracle},
        {"Pade moment matching", pade_matching},
        {"Pade convergence rate", convergence_rate},
        {"resolvent certificates", certificates},
        {"round trips", round_trips},
        {"structural identities", structural},
        {"numerical range", numerical_range},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::printf("%s %zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0),
                    o.detail.str().c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
