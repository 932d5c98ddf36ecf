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

#include <gjac/io.hpp>

#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace gjac;
using namespace gjac::testing;

TEST(IoMoments, WriteThenRead) {
    MomentSequence<Q> s({q(1), q(0), q(-1, 2), q(3)});
    const std::string text = io::write_moments(s);
    EXPECT_EQ(text, "{\"moments\": [\"1\", \"0\", \"-1/2\", \"3\"]}\n");
    auto back = io::read_moments<Q>(io::parse_json(text));
    EXPECT_EQ(back.coeffs, s.coeffs);
}

TEST(IoMoments, NumbersAndDecimals) {
    auto doc = io::parse_json(R"({"moments": [1, "2/4", "0.125", -3]})");
    EXPECT_TRUE(io::has_decimal(doc));
    auto s = io::read_moments<Q>(doc);
    EXPECT_EQ(s[1], q(1, 2));
    EXPECT_EQ(s[2], q(1, 8));
    EXPECT_EQ(s[3], q(-3));
    auto f = io::read_moments<double>(doc);
    EXPECT_DOUBLE_EQ(f[2], 0.125);
    EXPECT_FALSE(io::has_decimal(io::parse_json(R"({"moments": ["1", "-1/3"]})")));
}

TEST(ParseRational, Literals) {
    EXPECT_EQ(parse_rational("0.125"), q(1, 8));
    EXPECT_EQ(parse_rational("007/010"), q(7, 10));
    EXPECT_EQ(parse_rational("-0.5"), q(-1, 2));
    EXPECT_EQ(parse_rational("+3"), q(3));
    EXPECT_EQ(parse_rational("-08"), q(-8));
    EXPECT_EQ(parse_rational("1e-3"), q(1, 1000));
    EXPECT_EQ(parse_rational("2.50E2"), q(250));
    EXPECT_EQ(parse_rational(" 0 "), q(0));
    EXPECT_THROW(parse_rational("1/-"), Error);
    EXPECT_THROW(parse_rational("1.2.3"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(IoMoments, Errors) {
    EXPECT_THROW(io::parse_json("{\"moments\": ["), Error);
    EXPECT_THROW(io::read_moments<Q>(io::parse_json(R"({"moments": ["1/0"]})")), Error);
    EXPECT_THROW(io::read_moments<Q>(io::parse_json(R"({"moments": [true]})")), Error);
    EXPECT_THROW(io::read_moments<Q>(io::parse_json(R"({"terms": []})")), Error);
}

TEST(IoPFraction, RoundTrip) {
    auto pf = degenerate_pf(3);
    pf.terms.back().b_squared.reset();
    pf.status = PFractionStatus::exhausted;
    pf.scale = q(1, 2);
    const std::string text = io::write_pfraction(pf, 10);
    auto doc = io::read_pfraction<Q>(io::parse_json(text));
    EXPECT_EQ(doc.pf.terms, pf.terms);
    EXPECT_EQ(doc.pf.status, pf.status);
    EXPECT_EQ(doc.pf.scale, pf.scale);
    EXPECT_EQ(doc.pf.degree_cap, pf.degree_cap);
    EXPECT_EQ(doc.moment_count, 10u);
    EXPECT_EQ(io::write_pfraction(doc.pf, doc.moment_count), text);
}

TEST(IoPFraction, StatusWordIsNotADecimal) {
    auto text = io::write_pfraction(catalan_pf(2));
    EXPECT_FALSE(io::has_decimal(io::parse_json(text)));
    auto pf = catalan_pf(2);
    pf.status = PFractionStatus::exhausted;
    EXPECT_FALSE(io::has_decimal(io::parse_json(io::write_pfraction(pf))));
}

TEST(IoPFraction, Defaults) {
    auto doc = io::read_pfraction<Q>(io::parse_json(R"({"terms":[{"p":["0","0","1"]}]})"));
    ASSERT_EQ(doc.pf.size(), 1u);
    EXPECT_EQ(doc.pf.terms[0].epsilon, 1);
    EXPECT_FALSE(doc.pf.terms[0].b_squared);
    EXPECT_EQ(doc.pf.status, PFractionStatus::open);
    EXPECT_EQ(doc.pf.degree_cap, 2u);
    EXPECT_FALSE(doc.moment_count);
}

TEST(IoPFraction, Errors) {
    auto bad = [](const char* text) { return io::read_pfraction<Q>(io::parse_json(text)); };
    EXPECT_THROW(bad(R"({"terms":[{"epsilon":2,"p":["0","1"]}]})"), Error);
    EXPECT_THROW(bad(R"({"terms":[{"p":["0","2"]}]})"), Error);
    EXPECT_THROW(bad(R"({"terms":[{"p":["1"]}]})"), Error);
    EXPECT_THROW(bad(R"({"terms":[{"b_squared":"-1","p":["0","1"]}]})"), Error);
    EXPECT_THROW(bad(R"({"terms":[{"p":["0","1"]}],"status":"done"})"), Error);
}

TEST(IoTables, ConvergenceCsv) {
    ConvergenceTable t;
    ConvergenceRow a;
    a.j = 1, a.n = 1, a.value = Complex(-0.5, 0.0), a.abs_error = 0.25, a.match_order = 1;
    ConvergenceRow b;
    b.j = 2, b.n = 2;
    t.rows = {a, b};
    std::ostringstream os;
    io::write_convergence_csv(os, t);
    EXPECT_EQ(os.str(), "j,n_j,value_re,value_im,abs_error,match_order\n1,1,-0.5,0,0.25,1\n2,2,,,,\n");
    auto j = io::convergence_json(t);
    EXPECT_TRUE(j["rows"][1]["value"].is_null());
    EXPECT_TRUE(j["ratio"].is_null());
}

TEST(IoTables, ScanAndCertificate) {
    auto mono = monodromy(make_periodic(catalan_pf(1), 1));
    auto sc = scan(mono, Region{-3, 3, -1, 1}, 7, 3, 1e-3);
    std::ostringstream os;
    io::write_scan_csv(os, sc);
    std::size_t lines = 0;
    for (char c : os.str()) lines += c == '\n';
    EXPECT_EQ(lines, 1u + 21u);
    auto sum = io::scan_summary_json(sc, 1);
    EXPECT_EQ(sum["counts"]["E"].get<std::size_t>(), sc.count(SpectrumLabel::E));
    EXPECT_EQ(sum["grid"][0].get<std::size_t>(), 7u);

    Certificate c;
    c.lambda = Complex(3.0, 0.0);
    c.verdict = CertificateVerdict::certified_decay;
    auto cj = io::certificate_json(c);
    EXPECT_EQ(cj["verdict"], "certified_decay");
    EXPECT_EQ(cj["lambda"][0].get<double>(), 3.0);
}
