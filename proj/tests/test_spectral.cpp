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

#include <gjac/spectral.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace gjac;
using namespace gjac::testing;

namespace {

Complex100 c100(double re, double im = 0.0) { return Complex100(Real100(re), Real100(im)); }

Complex100 catalan_m100(const Complex100& z) {
    using boost::multiprecision::sqrt;
    Complex100 w = (-z + sqrt(z * z - Complex100(4))) / Complex100(2);
    if (abs(w) > 1) w = (-z - sqrt(z * z - Complex100(4))) / Complex100(2);
    return w;
}

}  // namespace

TEST(WeylSolution, CatalanDecay) {
    auto seqs = generate(catalan_pf(41), 40);
    const Complex100 m = catalan_m100(c100(3.0));
    auto d = weyl_solution(seqs, c100(3.0), m, 40);
    const double r = (3.0 - std::sqrt(5.0)) / 2.0;
    // W_0 = m = -r, so |W_j| = r^{j+1}.
    for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(static_cast<double>(abs(d.W[j])), std::pow(r, j + 1), 1e-14);
    EXPECT_NEAR(static_cast<double>(abs(d.W[40])), std::pow(r, 41), 1e-20);
    EXPECT_LE(d.recurrence_residual, 1e-10);
    EXPECT_LE(d.wronskian_defect, 1e-10);
    EXPECT_EQ(d.W[0], m);
}

TEST(WeylSolution, WrongMGrows) {
    auto seqs = generate(catalan_pf(21), 20);
    auto d = weyl_solution(seqs, c100(3.0), c100(0.0), 20);
    const double R = (3.0 + std::sqrt(5.0)) / 2.0;
    const double ratio = static_cast<double>(abs(d.W[20]) / abs(d.W[19]));
    EXPECT_NEAR(ratio, R, 1e-6);
    EXPECT_THROW(weyl_solution(seqs, c100(3.0), c100(0.0), 22), Error);
}

TEST(PointSpectrum, Examples) {
    auto cat = generate(catalan_pf(31), 30);
    EXPECT_EQ(point_spectrum_test(cat, c100(3.0), 30).verdict, SpectrumVerdict::divergent);
    EXPECT_EQ(point_spectrum_test(cat, c100(0.0), 30).verdict, SpectrumVerdict::bounded_so_far);
    auto ex = generate(cross_pf(31), 30);
    EXPECT_EQ(point_spectrum_test(ex, c100(1.0, 1.0), 30).verdict, SpectrumVerdict::divergent);
}

TEST(Certificate, CatalanResolventPoint) {
    auto seqs = generate(catalan_pf(41), 40);
    auto cert = resolvent_certificate(seqs, c100(3.0), catalan_m100(c100(3.0)), 40);
    EXPECT_EQ(cert.verdict, CertificateVerdict::certified_decay);
    EXPECT_GE(cert.q, 0.35);
    EXPECT_LE(cert.q, 0.42);
    EXPECT_GT(cert.limsup_root, 1.0);
    EXPECT_LE(cert.max_residual, 1e-12 * cert.C);
}

TEST(Certificate, CatalanSpectrumPoint) {
    auto seqs = generate(catalan_pf(161), 40);
    const Complex100 z = c100(0.5);
    const Complex100 m = deep_m(seqs.source, c100(0.5, 1e-12), 160);
    auto cert = resolvent_certificate(seqs, z, m, 40);
    EXPECT_NE(cert.verdict, CertificateVerdict::certified_decay);
}

TEST(Certificate, Cross) {
    auto pf = cross_pf(161);
    auto seqs = generate(pf, 40);
    const Complex100 z = c100(1.0, 1.0);
    auto cert = resolvent_certificate(seqs, z, deep_m(pf, z, 160), 40);
    EXPECT_EQ(cert.verdict, CertificateVerdict::certified_decay);
    EXPECT_LT(cert.q, 1.0);
}

TEST(ResolventColumn, Examples) {
    auto pf = catalan_pf(30);
    auto seqs = generate(pf, 1);
    auto h = assemble(pf);
    const Complex100 z = c100(3.0), m = catalan_m100(z);
    EXPECT_LE(formal_resolvent_column(seqs, h, z, m, 0, 0, 20).interior_residual, 1e-9);
    EXPECT_LE(formal_resolvent_column(seqs, h, z, m, 2, 0, 20).interior_residual, 1e-9);

    auto dpf = degenerate_pf(30);
    auto dh = assemble(dpf);
    auto dseqs = generate(dpf, 1);
    const Complex100 w = c100(2.0, 1.0);
    const Complex100 dm = deep_m(dpf, w, 30);
    EXPECT_LE(formal_resolvent_column(dseqs, dh, w, dm, 0, 1, 20).interior_residual, 1e-9);

    EXPECT_THROW(formal_resolvent_column(seqs, h, z, m, 0, 1, 20), Error);
    EXPECT_THROW(formal_resolvent_column(seqs, h, z, m, 5, 0, 5), Error);
}

TEST(ResolventColumn, BoundaryTermDecays) {
    auto pf = cross_pf(40);
    auto seqs = generate(pf, 1);
    auto h = assemble(pf);
    const Complex100 z = c100(1.0, 1.0);
    const Complex100 m = deep_m(pf, z, 40);
    double prev = HUGE_VAL;
    for (std::size_t trunc : {6u, 10u, 14u, 18u}) {
        auto col = formal_resolvent_column(seqs, h, z, m, 1, 1, trunc);
        EXPECT_LE(col.interior_residual, 1e-9);
        EXPECT_LE(col.full_residual, prev);
        prev = col.full_residual;
    }
}
