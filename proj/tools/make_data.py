# Copyright 2026 The gjac Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the sample inputs in data/ using exact Python fractions."""

import json
import pathlib
import sys
from fractions import Fraction

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_moments(path, s):
    body = ", ".join(json.dumps(fmt(v)) for v in s)
    path.write_text('{"moments": [' + body + "]}\n")


def write_pfraction(path, terms, status="open"):
    rows = []
    for eps, b2, p in terms:
        t = {"epsilon": eps}
        if b2 is not None:
            t["b_squared"] = fmt(b2)
        t["p"] = [fmt(c) for c in p]
        rows.append(json.dumps(t, separators=(",", ":")))
    cap = max(len(p) - 1 for _, _, p in terms)
    text = '{\n  "terms": [\n    ' + ",\n    ".join(rows) + "\n  ],\n"
    text += f'  "status": "{status}",\n  "scale": "1",\n  "degree_cap": {cap}\n}}\n'
    path.write_text(text)


def series_inverse(a, n):
    inv = [Fraction(0)] * n
    inv[0] = 1 / a[0]
    for i in range(1, n):
        acc = sum(a[k] * inv[i - k] for k in range(1, min(i, len(a) - 1) + 1))
        inv[i] = -acc / a[0]
    return inv


def moments_of(terms, count):
    """Coefficients s_i of -sum s_i x^(i+1) for the composed fraction, x = 1/lambda."""
    n = count + 1
    m = [Fraction(0)] * n
    for j in reversed(range(len(terms))):
        eps, b2, p = terms[j]
        k = len(p) - 1
        den = [Fraction(c) for c in reversed(p)] + [Fraction(0)] * n
        den = den[:n]
        if j + 1 < len(terms):
            for i in range(n - k):
                den[i + k] += eps * Fraction(b2) * m[i]
        inv = series_inverse(den, n)
        m = [Fraction(0)] * n
        for i in range(n - k):
            m[i + k] = -eps * inv[i]
    return [-m[i + 1] for i in range(count)]


def catalan(count):
    s, c = [], Fraction(1)
    for i in range(count):
        if i % 2:
            s.append(Fraction(0))
        else:
            k = i // 2
            s.append(c)
            c = c * 2 * (2 * k + 1) / (k + 2)
    return s


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    cat = [(1, 1, [0, 1])]
    quarter = [(1, Fraction(1, 4), [0, 0, 1])]
    write_moments(OUT / "catalan.json", catalan(322))
    write_pfraction(OUT / "catalan_pf.json", cat * 4)
    write_pfraction(OUT / "cross.json", quarter * 200)
    write_moments(OUT / "degenerate.json", moments_of([(1, 1, [0, 0, 1])] + cat * 40, 40))
    write_moments(OUT / "zero.json", [0] * 8)


if __name__ == "__main__":
    main()
