"""Regenerate corpus/fixtures/*.json from closed forms.

The expected values here are derived by hand (Boolean lattices, pencils of
lines, the rank-3 examples) and expanded with sympy. Nothing in this script
calls the C++ library, so the fixtures act as an independent oracle.

    python3 tools/fixture_oracle.py
"""

import json
from fractions import Fraction
from math import comb
from pathlib import Path

import sympy as sp

s, t = sp.symbols("s t")
OUT = Path(__file__).resolve().parent.parent / "corpus" / "fixtures"


def ascending(poly, var):
    p = sp.Poly(sp.expand(poly), var)
    coeffs = list(reversed(p.all_coeffs()))
    return [str(sp.Rational(c)) for c in coeffs]


def zeta_single(expr):
    """Reduced one-variable rational function with primitive linear denominators.

    Denominator factors a*s + b are normalized to gcd(a, b) = 1 and a > 0, and
    the numerator absorbs the scalar, mirroring the library's canonical form.
    """
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    scalar, factors = sp.factor_list(den)
    den_out = []
    for f, order in factors:
        a, b = sp.Poly(f, s).all_coeffs()
        g = sp.gcd(a, b)
        a, b = a / g, b / g
        scalar *= g**order
        if a < 0:
            a, b = -a, -b
            scalar *= (-1) ** order
        den_out.append([int(a), int(b), int(order)])
    den_out.sort()
    return {"numerator": ascending(num / scalar, s), "denominator": den_out}


def frac_list(values):
    return [str(v) if v.denominator != 1 else str(v.numerator) for v in sorted(set(values), reverse=True)]


def r_w(rank, size):
    return [Fraction(-(rank + j), size) for j in range(0, 2 * (size - rank) + 1)]


def fixture(rank_counts, dense, chi, verdict, exponents, roots, lct, lower, zeta):
    out = {
        "rank_counts": rank_counts,
        "dense_count": dense,
        "char_poly": ascending(chi, t),
        "freeness": verdict,
        "lower_bound_count": lower,
        "zeta_single": zeta_single(zeta),
        "smc_pass": True,
    }
    if exponents is not None:
        out["exponents"] = exponents
    if roots is not None:
        out["free_roots"] = frac_list(roots)
    if lct is not None:
        out["lct"] = str(lct)
    return out


def boolean(n):
    return fixture([comb(n, k) for k in range(n + 1)], n, (t - 1) ** n, "free", [1] * n, [Fraction(-1)],
                   Fraction(1), n, 1 / (s + 1) ** n)


def pencil(d):
    if d == 2:
        return boolean(2)
    roots = r_w(1, 1) + r_w(2, d)
    zeta = ((2 - d) * s + 2) / ((d * s + 2) * (s + 1))
    return fixture([1, d, 1], d + 1, t**2 - d * t + (d - 1), "free", [1, d - 1], roots, Fraction(2, d), 2 * d, zeta)


def main():
    fx = {f"boolean{n}": boolean(n) for n in range(1, 5)}
    fx.update({f"generic-2-{d}": pencil(d) for d in range(2, 7)})
    fx["xy-xplusy"] = pencil(3)
    fx["braid-a2"] = pencil(3)
    fx["budur-example"] = fixture([1, 4, 6, 1], 5, t**3 - 4 * t**2 + 6 * t - 3, "not-free", None, None,
                                  Fraction(3, 4), 8, (s**2 - 2 * s + 3) / ((s + 1) ** 2 * (4 * s + 3)))
    # Support xy is free; x^2 y is not reduced, so no roots or lct.
    fx["x2y"] = fixture([1, 2, 1], 2, (t - 1) ** 2, "free", [1, 1], None, None, 3, 1 / ((2 * s + 1) * (s + 1)))
    a3_roots = r_w(1, 1) + r_w(2, 3) + r_w(3, 6)
    fx["supersolvable-a3"] = fixture([1, 6, 7, 1], 11, (t - 1) * (t - 2) * (t - 3), "free", [1, 2, 3], a3_roots,
                                     Fraction(1, 2), 24,
                                     (2 * s**3 - 2 * s**2 - s + 2) / ((s + 1) ** 2 * (2 * s + 1) * (3 * s + 2)))
    OUT.mkdir(parents=True, exist_ok=True)
    for name, data in fx.items():
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n")


if __name__ == "__main__":
    main()
