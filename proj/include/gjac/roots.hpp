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

#ifndef GJAC_ROOTS_HPP
#define GJAC_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace gjac {

struct RootResult {
    std::vector<Complex> roots;
    bool converged = false;
    int iterations = 0;
};

struct AberthOptions {
    double tol = 1e-12;
    int max_iterations = 200;
    int restarts = 3;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Simultaneous Aberth-Ehrlich iteration for all complex roots.
template <class T>
RootResult aberth_roots(const Polynomial<T>& poly, const AberthOptions& opt = {}) {
    if (poly.is_zero()) raise(ErrorKind::OutOfRange, "zero polynomial has no finite root set");
    const int n = poly.degree();
    RootResult out;
    if (n <= 0) {
        out.converged = true;
        return out;
    }
    std::vector<Complex> c;
    for (const auto& v : poly.coeffs()) c.push_back(scalar_cast<Complex>(v));
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    const Polynomial<Complex> p(c);
    const Polynomial<Complex> dp = p.derivative();

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
    radius = 1.0 + radius;  // Cauchy bound
    double centre_shift = 0.0;
    if (n > 0) centre_shift = -std::real(c[static_cast<std::size_t>(n - 1)]) / n;

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    RootResult best;
    double best_step = HUGE_VAL;
    for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
        std::vector<Complex> z(static_cast<std::size_t>(n));
        const double phase = attempt == 0 ? 0.4 : 2.0 * std::numbers::pi * jitter(rng);
        const double r = attempt == 0 ? 0.5 * radius : radius * (0.3 + 0.7 * jitter(rng));
        for (int k = 0; k < n; ++k)
            z[static_cast<std::size_t>(k)] =
                centre_shift + std::polar(r, phase + 2.0 * std::numbers::pi * k / n);
        double step = HUGE_VAL;
        int it = 0;
        for (; it < opt.max_iterations; ++it) {
            step = 0.0;
            for (std::size_t k = 0; k < z.size(); ++k) {
                const Complex pv = p(z[k]);
                if (pv == Complex(0)) continue;
                const Complex ratio = pv / dp(z[k]);
                Complex sum(0);
                for (std::size_t j = 0; j < z.size(); ++j)
                    if (j != k) sum += 1.0 / (z[k] - z[j]);
                const Complex w = ratio / (1.0 - ratio * sum);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
                z[k] -= w;
                step = std::max(step, std::abs(w) / (1.0 + std::abs(z[k])));
            }
            if (step <= opt.tol) break;
        }
        if (step < best_step) {
            best_step = step;
            best = {z, step <= opt.tol, it + 1};
        }
        if (best.converged) break;
    }
    std::sort(best.roots.begin(), best.roots.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return best;
}

}  // namespace gjac

#endif  // GJAC_ROOTS_HPP
