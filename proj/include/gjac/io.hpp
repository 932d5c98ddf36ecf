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

#ifndef GJAC_IO_HPP
#define GJAC_IO_HPP

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "moments.hpp"
#include "pade.hpp"
#include "periodic.hpp"
#include "pfraction.hpp"
#include "scalar.hpp"
#include "spectral.hpp"

namespace gjac::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        raise(ErrorKind::Parse, e.what());
    }
}

/// True when some number in the document is written as a decimal.
inline bool has_decimal(const Json& j) {
    switch (j.type()) {
        case Json::value_t::number_float: return true;
        case Json::value_t::string: {
            const std::string t = j.get<std::string>();
            const bool numeric = !t.empty() && t.find_first_not_of("0123456789+-./eE ") == std::string::npos;
            return numeric && is_decimal_literal(t);
        }
        case Json::value_t::array:
        case Json::value_t::object:
            for (const auto& v : j)
                if (has_decimal(v)) return true;
            return false;
        default: return false;
    }
}

template <class T>
T parse_number(const Json& j) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float())
        text = j.dump();
    else
        raise(ErrorKind::Parse, "expected a number, got " + j.dump());
    if constexpr (ring_traits<T>::exact)
        return parse_rational(text);
    else
        return parse_double(text);
}

template <class T>
std::string format_number(const T& x) {
    return ring_traits<T>::to_string(x);
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

// --- moments ------------------------------------------------------------

inline bool is_moments_document(const Json& j) { return j.is_object() && j.contains("moments"); }
inline bool is_pfraction_document(const Json& j) { return j.is_object() && j.contains("terms"); }

template <class T>
MomentSequence<T> read_moments(const Json& j) {
    if (!is_moments_document(j) || !j["moments"].is_array()) raise(ErrorKind::Parse, "expected {\"moments\": [...]}");
    std::vector<T> s;
    for (const auto& v : j["moments"]) s.push_back(parse_number<T>(v));
    return MomentSequence<T>(std::move(s));
}

/// Single-line form {"moments": ["1", "0", ...]} followed by a newline.
template <class T>
std::string write_moments(const MomentSequence<T>& s) {
    std::string out = "{\"moments\": [";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += Json(format_number(s[i])).dump();
    }
    out += "]}\n";
    return out;
}

// --- P-fractions ----------------------------------------------------------

template <class T>
struct PFractionDocument {
    PFraction<T> pf;
    /// Length of the moment input the fraction was expanded from, if recorded.
    std::optional<std::size_t> moment_count;
};

template <class T>
PFractionDocument<T> read_pfraction(const Json& j) {
    if (!is_pfraction_document(j) || !j["terms"].is_array()) raise(ErrorKind::Parse, "expected {\"terms\": [...]}");
    PFractionDocument<T> doc;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("p") || !t["p"].is_array()) raise(ErrorKind::Parse, "term without p");
        PFractionTerm<T> term;
        const int eps = t.value("epsilon", 1);
        if (eps != 1 && eps != -1) raise(ErrorKind::Parse, "epsilon must be +1 or -1");
        term.epsilon = eps;
        if (t.contains("b_squared") && !t["b_squared"].is_null()) {
            term.b_squared = parse_number<T>(t["b_squared"]);
            if (!(*term.b_squared > T(0))) raise(ErrorKind::Parse, "b_squared must be positive");
        }
        std::vector<T> c;
        for (const auto& v : t["p"]) c.push_back(parse_number<T>(v));
        term.p = Polynomial<T>(std::move(c));
        if (!term.p.is_monic() || term.p.degree() < 1) raise(ErrorKind::NotMonic, "p must be monic of degree >= 1");
        doc.pf.terms.push_back(std::move(term));
    }
    if (j.contains("status")) doc.pf.status = parse_status(j["status"].get<std::string>());
    if (j.contains("scale")) doc.pf.scale = parse_number<T>(j["scale"]);
    doc.pf.degree_cap = j.contains("degree_cap") ? j["degree_cap"].get<std::size_t>() : doc.pf.max_degree();
    if (j.contains("moment_count")) doc.moment_count = j["moment_count"].get<std::size_t>();
    return doc;
}

template <class T>
Json term_json(const PFractionTerm<T>& t) {
    Json j;
    j["epsilon"] = t.epsilon;
    if (t.b_squared) j["b_squared"] = format_number(*t.b_squared);
    Json p = Json::array();
    for (const auto& c : t.p.coeffs()) p.push_back(format_number(c));
    j["p"] = p;
    return j;
}

/// One term per line.
template <class T>
std::string write_pfraction(const PFraction<T>& pf, std::optional<std::size_t> moment_count = std::nullopt) {
    std::ostringstream os;
    os << "{\n  \"terms\": [";
    for (std::size_t i = 0; i < pf.size(); ++i) os << (i ? ",\n    " : "\n    ") << term_json(pf.terms[i]).dump();
    os << (pf.empty() ? "],\n" : "\n  ],\n");
    os << "  \"status\": \"" << to_string(pf.status) << "\",\n";
    os << "  \"scale\": " << Json(format_number(pf.scale)).dump() << ",\n";
    os << "  \"degree_cap\": " << pf.degree_cap;
    if (moment_count) os << ",\n  \"moment_count\": " << *moment_count;
    os << "\n}\n";
    return os.str();
}

// --- results ----------------------------------------------------------------

inline Json certificate_json(const Certificate& c) {
    Json j;
    j["lambda"] = complex_json(c.lambda);
    j["m"] = complex_json(c.m_value);
    j["depth"] = c.depth;
    j["C"] = c.C;
    j["q"] = c.q;
    j["max_residual"] = c.max_residual;
    j["limsup_root"] = c.limsup_root;
    j["tail_growth"] = c.tail_growth;
    j["verdict"] = to_string(c.verdict);
    return j;
}

inline Json convergence_json(const ConvergenceTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["j"] = r.j;
        row["n_j"] = r.n;
        row["value"] = r.value ? complex_json(*r.value) : Json();
        row["abs_error"] = r.abs_error ? Json(*r.abs_error) : Json();
        row["match_order"] = r.match_order ? Json(*r.match_order) : Json();
        rows.push_back(row);
    }
    Json j;
    j["rows"] = rows;
    j["ratio"] = t.ratio ? Json(*t.ratio) : Json();
    return j;
}

/// Columns j, n_j, value_re, value_im, abs_error, match_order; empty cells where undefined.
inline void write_convergence_csv(std::ostream& os, const ConvergenceTable& t) {
    os << "j,n_j,value_re,value_im,abs_error,match_order\n";
    for (const auto& r : t.rows) {
        os << r.j << ',' << r.n << ',';
        if (r.value) os << format_double(r.value->real()) << ',' << format_double(r.value->imag());
        else os << ',';
        os << ',';
        if (r.abs_error) os << format_double(*r.abs_error);
        os << ',';
        if (r.match_order) os << *r.match_order;
        os << '\n';
    }
}

inline void write_scan_csv(std::ostream& os, const SpectrumScan& s) {
    os << "re,im,label,trace_re,trace_im,w1_abs,w2_abs\n";
    for (const auto& p : s.points)
        os << format_double(p.lambda.real()) << ',' << format_double(p.lambda.imag()) << ',' << to_string(p.label) << ','
           << format_double(p.trace.real()) << ',' << format_double(p.trace.imag()) << ',' << format_double(p.w1_abs)
           << ',' << format_double(p.w2_abs) << '\n';
}

inline Json scan_summary_json(const SpectrumScan& s, std::size_t period) {
    Json j;
    j["period"] = period;
    j["region"] = Json::array({s.region.xmin, s.region.xmax, s.region.ymin, s.region.ymax});
    j["grid"] = Json::array({s.nx, s.ny});
    j["tol"] = s.tol;
    j["counts"] = {{"resolvent", s.count(SpectrumLabel::resolvent)},
                   {"E", s.count(SpectrumLabel::E)},
                   {"E_p", s.count(SpectrumLabel::E_p)}};
    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (const auto& p : s.points)
        if (p.label == SpectrumLabel::E) {
            xmin = std::min(xmin, p.lambda.real()), xmax = std::max(xmax, p.lambda.real());
            ymin = std::min(ymin, p.lambda.imag()), ymax = std::max(ymax, p.lambda.imag());
        }
    j["E_extent"] = xmin <= xmax ? Json::array({xmin, xmax, ymin, ymax}) : Json();
    Json roots = Json::array();
    for (const auto& z : s.ep_roots) roots.push_back(complex_json(z));
    j["E_p_roots"] = roots;
    j["roots_converged"] = s.roots_converged;
    return j;
}

}  // namespace gjac::io

#endif  // GJAC_IO_HPP
