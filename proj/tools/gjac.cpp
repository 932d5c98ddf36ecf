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

// gjac: moments -> P-fraction -> generalized Jacobi matrix -> Pade / spectral data.

#include <gjac/gjac.hpp>
#include <gjac/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace gjac;

enum class Ring { automatic, exact, floating };

struct RunConfig {
    std::string subcommand;
    std::string input;
    Ring ring = Ring::automatic;
    double tol = 1e-3;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    std::string summary;

    std::size_t max_terms = 1000;
    std::size_t degree_cap = 16;
    std::size_t count = 0;
    std::string lambda = "0,0";
    std::string orders = "1..8";
    std::string reference = "none";
    std::size_t period = 0;
    std::string region = "-2,2,-2,2";
    std::string grid = "200";
    std::size_t depth = 40;
    std::size_t m_depth = 0;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::NotMonic:
        case ErrorKind::BadRange:
        case ErrorKind::OutOfRange: return 2;
        case ErrorKind::InsufficientMoments:
        case ErrorKind::DegreeCapExceeded:
        case ErrorKind::AllZero:
        case ErrorKind::EmptyPFraction:
        case ErrorKind::NotEnoughTerms:
        case ErrorKind::TruncationTooShallow: return 3;
        case ErrorKind::PoleAtLambda: return 4;
        case ErrorKind::NotPeriodic: return 5;
        default: return 1;
    }
}

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::Parse, "cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

class Output {
   public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    /// Where human-readable notes go: stdout when the data went to a file.
    std::ostream& notes() { return file_.is_open() ? std::cout : std::cerr; }

   private:
    std::ofstream file_;
};

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_double(text), 0.0};
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::vector<std::size_t> parse_orders(const std::string& text) {
    const auto dots = text.find("..");
    auto index = [](const std::string& s) {
        const std::string t = detail::trim(s);
        if (!detail::is_integer_literal(t) || t[0] == '-') raise(ErrorKind::Parse, "bad order '" + s + "'");
        return static_cast<std::size_t>(std::stoul(t));
    };
    const std::size_t a = index(text.substr(0, dots));
    const std::size_t b = dots == std::string::npos ? a : index(text.substr(dots + 2));
    if (a == 0 || b < a) raise(ErrorKind::BadRange, "orders must satisfy 1 <= a <= b");
    std::vector<std::size_t> js;
    for (std::size_t j = a; j <= b; ++j) js.push_back(j);
    return js;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    auto count = [](const std::string& s) {
        const std::string t = detail::trim(s);
        if (!detail::is_integer_literal(t) || t[0] == '-') raise(ErrorKind::Parse, "bad grid '" + s + "'");
        return static_cast<std::size_t>(std::stoul(t));
    };
    if (x == std::string::npos) {
        const std::size_t n = count(text);
        return {n, n};
    }
    return {count(text.substr(0, x)), count(text.substr(x + 1))};
}

Complex100 to_c100(const Complex& z) { return Complex100(Real100(z.real()), Real100(z.imag())); }

/// m(lambda) = (-lambda + sqrt(lambda^2 - 4)) / 2 on the branch with |m| < 1.
Complex100 catalan_m(const Complex100& z) {
    using boost::multiprecision::sqrt;
    Complex100 w = (-z + sqrt(z * z - Complex100(4))) / Complex100(2);
    if (abs(w) > 1) w = (-z - sqrt(z * z - Complex100(4))) / Complex100(2);
    return w;
}

std::function<Complex(Complex)> reference_function(const std::string& name) {
    if (name == "none") return {};
    if (name == "sqrt-catalan") return [](Complex z) { return scalar_cast<Complex>(catalan_m(to_c100(z))); };
    raise(ErrorKind::Parse, "unknown reference '" + name + "'");
}

template <class T>
struct Input {
    std::optional<MomentSequence<T>> moments;
    PFraction<T> pf;
    std::optional<std::size_t> moment_count;
};

template <class T>
Input<T> load(const io::Json& doc, const RunConfig& cfg) {
    Input<T> in;
    if (io::is_moments_document(doc)) {
        in.moments = io::read_moments<T>(doc);
        in.pf = expand(*in.moments, cfg.max_terms, cfg.degree_cap);
        in.moment_count = in.moments->size();
    } else if (io::is_pfraction_document(doc)) {
        auto d = io::read_pfraction<T>(doc);
        in.pf = std::move(d.pf);
        in.moment_count = d.moment_count;
    } else {
        raise(ErrorKind::Parse, "input is neither a moments nor a P-fraction document");
    }
    return in;
}

template <class T>
int cmd_expand(const io::Json& doc, const RunConfig& cfg) {
    if (!io::is_moments_document(doc)) raise(ErrorKind::Parse, "expand needs a moments document");
    const Input<T> in = load<T>(doc, cfg);
    Output out(cfg.out);
    out.stream() << io::write_pfraction(in.pf, in.moment_count);
    const auto n = in.pf.normal_indices();
    out.notes() << "terms " << in.pf.size() << " status " << to_string(in.pf.status) << "\nn_j";
    for (auto v : n) out.notes() << ' ' << v;
    out.notes() << "\nk_j";
    for (const auto& t : in.pf.terms) out.notes() << ' ' << t.degree();
    out.notes() << '\n';
    return 0;
}

template <class T>
int cmd_moments(const io::Json& doc, const RunConfig& cfg) {
    const Input<T> in = load<T>(doc, cfg);
    std::size_t count = cfg.count;
    if (count == 0) count = in.moment_count.value_or(2 * in.pf.normal_indices().back());
    const auto r = to_moments(in.pf, count);
    Output out(cfg.out);
    out.stream() << io::write_moments(r.moments);
    if (r.certified < count)
        std::cerr << "warning: only the first " << r.certified << " of " << count << " moments are certified\n";
    return 0;
}

template <class T>
int cmd_pade(const io::Json& doc, const RunConfig& cfg) {
    const Input<T> in = load<T>(doc, cfg);
    const Complex lambda = parse_complex(cfg.lambda);
    const std::vector<std::size_t> js = parse_orders(cfg.orders);
    const OrthoSequences<T> seqs = generate(in.pf, js.back());
    const MomentSequence<T>* moments = in.moments ? &*in.moments : nullptr;
    const ConvergenceTable table = convergence_run(seqs, lambda, js, reference_function(cfg.reference), moments);
    if (std::none_of(table.rows.begin(), table.rows.end(), [](const ConvergenceRow& r) { return r.value.has_value(); }))
        raise(ErrorKind::PoleAtLambda, "every requested approximant has a pole at lambda");
    Output out(cfg.out);
    if (cfg.format == "json") {
        out.stream() << io::convergence_json(table).dump(2) << '\n';
    } else {
        io::write_convergence_csv(out.stream(), table);
        if (table.ratio) out.notes() << "ratio " << io::format_double(*table.ratio) << '\n';
    }
    return 0;
}

template <class T>
int cmd_spectrum(const io::Json& doc, const RunConfig& cfg) {
    const Input<T> in = load<T>(doc, cfg);
    const PeriodicGJM<T> pg = make_periodic(in.pf, cfg.period);
    const Monodromy mono = monodromy(pg);
    const auto [nx, ny] = parse_grid(cfg.grid);
    AberthOptions roots;
    roots.seed = cfg.seed;
    const SpectrumScan s = scan(mono, parse_region(cfg.region), nx, ny, cfg.tol, roots);
    const std::string summary = io::scan_summary_json(s, cfg.period).dump(2) + "\n";
    Output out(cfg.out);
    if (cfg.format == "json") {
        out.stream() << summary;
        return 0;
    }
    io::write_scan_csv(out.stream(), s);
    if (!cfg.summary.empty()) {
        Output sum(cfg.summary);
        sum.stream() << summary;
    } else {
        std::cerr << summary;
    }
    return 0;
}

template <class T>
int cmd_certify(const io::Json& doc, const RunConfig& cfg) {
    const Input<T> in = load<T>(doc, cfg);
    const Complex lambda = parse_complex(cfg.lambda);
    const Complex100 z = to_c100(lambda);
    const OrthoSequences<T> seqs = generate(in.pf, cfg.depth);
    Complex100 m;
    if (cfg.reference == "sqrt-catalan") {
        m = catalan_m(z);
    } else if (cfg.reference == "none") {
        const std::size_t depth = cfg.m_depth ? cfg.m_depth : in.pf.size();
        try {
            m = deep_m(in.pf, z, depth);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PoleAtLambda) throw;
            m = deep_m(in.pf, to_c100(lambda + Complex(0.0, 1e-12)), depth);
        }
    } else {
        raise(ErrorKind::Parse, "unknown reference '" + cfg.reference + "'");
    }
    const Certificate cert = resolvent_certificate(seqs, z, m, cfg.depth);
    Output out(cfg.out);
    out.stream() << io::certificate_json(cert).dump(2) << '\n';
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    using Q = Rational;
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (!ok) ++failures;
    };
    std::vector<Q> cat;
    for (std::size_t i = 0; i < 60; ++i) {
        Integer c = 1;
        const std::size_t k = i / 2;
        for (std::size_t r = 0; r < k; ++r) c = c * Integer(2 * (2 * r + 1)) / Integer(r + 2);
        cat.push_back(i % 2 ? Q(0) : Q(c));
    }
    const MomentSequence<Q> s(cat);
    const PFraction<Q> pf = expand(s, 100, 4);
    bool uniform = pf.size() == 30;
    for (std::size_t j = 0; j + 1 < pf.size(); ++j)
        uniform = uniform && pf.terms[j].epsilon == 1 && pf.terms[j].b_squared == Q(1) &&
                  pf.terms[j].p == Polynomial<Q>({Q(0), Q(1)});
    report("catalan expansion", uniform);
    report("moment round trip", to_moments(pf, s.size()).moments.coeffs == s.coeffs);

    const OrthoSequences<Q> seqs = generate(pf, 20);
    bool lo = true;
    for (std::size_t j = 0; j < 20; ++j) lo = lo && lo_residual(seqs, j).is_zero();
    report("liouville-ostrogradsky identity", lo);

    const Complex three(3.0);
    const Complex f22 = diagonal(seqs, 2)(three);
    report("pade [2/2] at 3", std::abs(std::abs(f22 - scalar_cast<Complex>(catalan_m(to_c100(three)))) - 0.00697) < 1e-4);

    PFraction<Q> ex;
    for (int j = 0; j < 4; ++j) {
        PFractionTerm<Q> t;
        t.b_squared = Q(1, 4);
        t.p = Polynomial<Q>({Q(0), Q(0), Q(1)});
        ex.terms.push_back(t);
    }
    const Monodromy mono = monodromy(make_periodic(ex, 1));
    report("periodic labels", classify(mono, Complex(0.5), cfg.tol) == SpectrumLabel::E &&
                                  classify(mono, Complex(0.0, 0.5), cfg.tol) == SpectrumLabel::E &&
                                  classify(mono, Complex(1.0, 1.0), cfg.tol) == SpectrumLabel::resolvent);

    const Certificate cert = resolvent_certificate(seqs, to_c100(three), catalan_m(to_c100(three)), 20);
    report("resolvent certificate", cert.verdict == CertificateVerdict::certified_decay);
    return failures == 0 ? 0 : 1;
}

template <class T>
int dispatch(const io::Json& doc, const RunConfig& cfg) {
    if (cfg.subcommand == "expand") return cmd_expand<T>(doc, cfg);
    if (cfg.subcommand == "moments") return cmd_moments<T>(doc, cfg);
    if (cfg.subcommand == "pade") return cmd_pade<T>(doc, cfg);
    if (cfg.subcommand == "spectrum") return cmd_spectrum<T>(doc, cfg);
    if (cfg.subcommand == "certify") return cmd_certify<T>(doc, cfg);
    return 1;
}

int run(const RunConfig& cfg) {
    if (!(cfg.tol > 0)) raise(ErrorKind::OutOfRange, "--tol must be positive");
    if (cfg.depth == 0) raise(ErrorKind::OutOfRange, "--depth must be at least 1");
    if (cfg.subcommand == "selftest") return cmd_selftest(cfg);
    const io::Json doc = io::parse_json(read_text(cfg.input));
    const bool exact = cfg.ring == Ring::exact || (cfg.ring == Ring::automatic && !io::has_decimal(doc));
    return exact ? dispatch<Rational>(doc, cfg) : dispatch<double>(doc, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Moment sequences, P-fractions and generalized Jacobi matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    bool exact = false, floating = false;
    auto* exact_flag = app.add_flag("--exact", exact, "Exact rational arithmetic");
    app.add_flag("--float", floating, "Double precision arithmetic")->excludes(exact_flag);
    app.add_option("--tol", cfg.tol, "Classification tolerance")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for root-finder restarts")->capture_default_str();
    app.add_option("--out", cfg.out, "Output path (default stdout)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "Input JSON ('-' for stdin)")->required(); };
    auto expansion = [&](CLI::App* sub) {
        sub->add_option("--max-terms", cfg.max_terms, "Largest number of P-fraction terms")->capture_default_str();
        sub->add_option("--degree-cap", cfg.degree_cap, "Largest block degree")->capture_default_str();
    };

    auto* expand_cmd = app.add_subcommand("expand", "Expand moments into a P-fraction");
    input(expand_cmd);
    expansion(expand_cmd);

    auto* moments_cmd = app.add_subcommand("moments", "Reconstruct moments from a P-fraction");
    input(moments_cmd);
    expansion(moments_cmd);
    moments_cmd->add_option("--count", cfg.count, "Number of moments (default: recorded input length)");

    auto* pade_cmd = app.add_subcommand("pade", "Diagonal Pade approximants at a point");
    input(pade_cmd);
    expansion(pade_cmd);
    pade_cmd->add_option("--lambda", cfg.lambda, "Evaluation point re,im")->required();
    pade_cmd->add_option("--orders", cfg.orders, "Indices a..b of the diagonal")->capture_default_str();
    pade_cmd->add_option("--reference", cfg.reference, "Reference function")
        ->check(CLI::IsMember({"none", "sqrt-catalan"}))
        ->capture_default_str();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Grid scan of a periodic operator's spectrum");
    input(spectrum_cmd);
    expansion(spectrum_cmd);
    spectrum_cmd->add_option("--period", cfg.period, "Period s")->required();
    spectrum_cmd->add_option("--region", cfg.region, "xmin,xmax,ymin,ymax")->capture_default_str();
    spectrum_cmd->add_option("--grid", cfg.grid, "N or NxM grid points")->capture_default_str();
    spectrum_cmd->add_option("--summary", cfg.summary, "Summary JSON path (default stderr)");

    auto* certify_cmd = app.add_subcommand("certify", "Decay certificate for the Weyl solution");
    input(certify_cmd);
    expansion(certify_cmd);
    certify_cmd->add_option("--lambda", cfg.lambda, "Point re,im")->required();
    certify_cmd->add_option("--depth", cfg.depth, "Depth J")->capture_default_str();
    certify_cmd->add_option("--m-depth", cfg.m_depth, "Truncation used for m (default: all terms)");
    certify_cmd->add_option("--reference", cfg.reference, "Closed-form m instead of a deep truncation")
        ->check(CLI::IsMember({"none", "sqrt-catalan"}))
        ->capture_default_str();

    app.add_subcommand("selftest", "Built-in consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.ring = exact ? Ring::exact : floating ? Ring::floating : Ring::automatic;
    if (cfg.format.empty()) cfg.format = (cfg.subcommand == "pade" || cfg.subcommand == "spectrum") ? "csv" : "json";

    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
