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

#ifndef GJAC_PERIODIC_HPP
#define GJAC_PERIODIC_HPP

// s-periodic generalized Jacobi matrices: monodromy T = W_0 ... W_{s-1}, Floquet
// multipliers w^2 - t w + 1 = 0 with t = P_s - eps_{s-1} b_{s-1} Q_{s-1}, and
// sigma(H) = E U E_p where E = {t in [-2, 2]}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pfraction.hpp"
#include "polyrec.hpp"
#include "roots.hpp"

namespace gjac {

template <class T>
struct PeriodicGJM {
    std::size_t period = 0;
    /// One period of terms; term j of the operator is terms[j % period].
    PFraction<T> cell;
};

/// Checks that `pf` repeats with period s and keeps one period. A term whose b^2
/// is unknown matches on epsilon and p alone.
template <class T>
PeriodicGJM<T> make_periodic(const PFraction<T>& pf, std::size_t s) {
    if (s == 0 || pf.size() < s || pf.size() % s != 0)
        raise(ErrorKind::NotPeriodic, "period " + std::to_string(s) + " does not divide " + std::to_string(pf.size()) + " terms");
    for (std::size_t j = s; j < pf.size(); ++j) {
        const auto& a = pf.terms[j];
        const auto& b = pf.terms[j % s];
        if (a.epsilon != b.epsilon || !(a.p == b.p) || (a.b_squared && a.b_squared != b.b_squared))
            raise(ErrorKind::NotPeriodic, "term " + std::to_string(j) + " breaks period " + std::to_string(s));
    }
    PeriodicGJM<T> pg;
    pg.period = s;
    pg.cell = pf.prefix(s);
    for (std::size_t j = 0; j < s; ++j)
        if (!pg.cell.terms[j].b_squared) raise(ErrorKind::NotPeriodic, "periodic terms need every b^2");
    return pg;
}

struct Monodromy {
    TransferMatrix<double> T;
    Polynomial<double> trace;
    /// Phat_{s-1} in float, with exact roots as the E_p candidates.
    Polynomial<double> p_hat_prev;
    /// Largest coefficient of det T - 1.
    double det_defect = 0.0;
};

template <class T>
Monodromy monodromy(const PeriodicGJM<T>& pg) {
    Monodromy m;
    m.T = transfer_product(pg.cell, pg.period - 1);
    m.trace = m.T.trace();
    const Polynomial<double> d = m.T.det() - Polynomial<double>::constant(1.0);
    for (double c : d.coeffs()) m.det_defect = std::max(m.det_defect, std::abs(c));
    const OrthoSequences<T> seqs = generate(pg.cell, pg.period - 1);
    m.p_hat_prev = seqs.p_hat[pg.period - 1].template map<double>([](const T& c) { return ring_traits<T>::to_double(c); });
    return m;
}

/// Roots of w^2 - t w + 1, |w_1| >= |w_2|.
inline std::pair<Complex, Complex> multipliers(const Complex& t) {
    const Complex disc = std::sqrt(t * t - 4.0);
    Complex w1 = (t + disc) / 2.0, w2 = (t - disc) / 2.0;
    if (std::abs(w2) > std::abs(w1)) std::swap(w1, w2);
    if (w1 != Complex(0)) w2 = 1.0 / w1;
    return {w1, w2};
}

inline std::pair<Complex, Complex> multipliers(const Monodromy& mono, const Complex& lambda) {
    return multipliers(mono.trace(lambda));
}

enum class SpectrumLabel { resolvent, E, E_p };

inline const char* to_string(SpectrumLabel l) {
    switch (l) {
        case SpectrumLabel::resolvent: return "resolvent";
        case SpectrumLabel::E: return "E";
        case SpectrumLabel::E_p: return "E_p";
    }
    return "resolvent";
}

namespace detail {

inline double modulus_bound(const Polynomial<double>& p, double r) {
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace detail

/// Phat_{s-1}(lambda) = 0 and |b_{s-1} Q_{s-1}(lambda)| > |P_s(lambda)| + tol.
inline bool in_point_spectrum(const Monodromy& mono, const Complex& lambda, double tol) {
    if (mono.p_hat_prev.degree() <= 0) return false;
    const double scale = std::max(1.0, detail::modulus_bound(mono.p_hat_prev, std::abs(lambda)));
    if (std::abs(mono.p_hat_prev(lambda)) > tol * scale) return false;
    const Complex bq = mono.T.entry[0][0](lambda);  // -eps_{s-1} b_{s-1} Q_{s-1}
    const Complex ps = mono.T.entry[1][1](lambda);  // P_s
    return std::abs(bq) > std::abs(ps) + tol;
}

/// t(lambda) within tol of [-2, 2].
inline bool in_band(const Monodromy& mono, const Complex& lambda, double tol) {
    const Complex t = mono.trace(lambda);
    return std::abs(t.imag()) <= tol && t.real() >= -2.0 - tol && t.real() <= 2.0 + tol;
}

inline SpectrumLabel classify(const Monodromy& mono, const Complex& lambda, double tol) {
    if (!(tol > 0)) raise(ErrorKind::OutOfRange, "tolerance must be positive");
    if (in_point_spectrum(mono, lambda, tol)) return SpectrumLabel::E_p;
    if (in_band(mono, lambda, tol)) return SpectrumLabel::E;
    return SpectrumLabel::resolvent;
}

template <class T>
SpectrumLabel classify(const Monodromy& mono, const PeriodicGJM<T>&, const Complex& lambda, double tol) {
    return classify(mono, lambda, tol);
}

struct Region {
    double xmin = -2, xmax = 2, ymin = -2, ymax = 2;

    bool contains(const Complex& z) const {
        return z.real() >= xmin && z.real() <= xmax && z.imag() >= ymin && z.imag() <= ymax;
    }
};

inline Region parse_region(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_double(item));
    if (v.size() != 4) raise(ErrorKind::Parse, "region must be xmin,xmax,ymin,ymax");
    Region r{v[0], v[1], v[2], v[3]};
    if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax)) raise(ErrorKind::BadRange, "empty region");
    return r;
}

struct ScanPoint {
    Complex lambda;
    SpectrumLabel label = SpectrumLabel::resolvent;
    Complex trace;
    double w1_abs = 0.0, w2_abs = 0.0;
};

struct SpectrumScan {
    Region region;
    std::size_t nx = 0, ny = 0;
    /// Base tolerance; each grid point widens it by |t'(lambda)| times the half cell diagonal.
    double tol = 0.0;
    std::vector<ScanPoint> points;  // row-major: imaginary part outer, real part inner
    /// Roots of Phat_{s-1} inside the region that pass the E_p test.
    std::vector<Complex> ep_roots;
    bool roots_converged = true;

    std::size_t count(SpectrumLabel l) const {
        return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [l](const ScanPoint& p) { return p.label == l; }));
    }
};

/// Labels an nx x ny grid. A grid generally misses the spectral curves, so the
/// trace test at each node accepts |t - [-2,2]| up to tol + |t'| h, h the half
/// cell diagonal: the first-order change of t across the cell.
inline SpectrumScan scan(const Monodromy& mono, const Region& region, std::size_t nx, std::size_t ny, double tol,
                         const AberthOptions& roots_opt = {}) {
    if (nx < 2 || ny < 2) raise(ErrorKind::BadRange, "grid needs at least 2 x 2 points");
    if (!(tol > 0)) raise(ErrorKind::OutOfRange, "tolerance must be positive");
    SpectrumScan out;
    out.region = region;
    out.nx = nx;
    out.ny = ny;
    out.tol = tol;
    const double dx = (region.xmax - region.xmin) / static_cast<double>(nx - 1);
    const double dy = (region.ymax - region.ymin) / static_cast<double>(ny - 1);
    const double h = 0.5 * std::hypot(dx, dy);
    const Polynomial<double> dt = mono.trace.derivative();
    out.points.reserve(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const Complex z(region.xmin + dx * static_cast<double>(ix), region.ymin + dy * static_cast<double>(iy));
            ScanPoint p;
            p.lambda = z;
            p.trace = mono.trace(z);
            const auto [w1, w2] = multipliers(p.trace);
            p.w1_abs = std::abs(w1);
            p.w2_abs = std::abs(w2);
            if (in_point_spectrum(mono, z, tol))
                p.label = SpectrumLabel::E_p;
            else if (in_band(mono, z, tol + std::abs(dt(z)) * h))
                p.label = SpectrumLabel::E;
            out.points.push_back(p);
        }
    if (mono.p_hat_prev.degree() > 0) {
        const RootResult r = aberth_roots(mono.p_hat_prev, roots_opt);
        out.roots_converged = r.converged;
        for (const auto& z : r.roots)
            if (region.contains(z) && classify(mono, z, tol) == SpectrumLabel::E_p) out.ep_roots.push_back(z);
    }
    return out;
}

template <class T>
SpectrumScan scan(const Monodromy& mono, const PeriodicGJM<T>&, const Region& region, std::size_t nx, std::size_t ny,
                  double tol, const AberthOptions& roots_opt = {}) {
    return scan(mono, region, nx, ny, tol, roots_opt);
}

}  // namespace gjac

#endif  // GJAC_PERIODIC_HPP
