"""Brute-force reference computations written directly with sympy.

These share no code with the package: the closed-form space is solved with
``sympy.linsolve`` over symbolic unknowns and non-degeneracy is decided from
the determinant polynomial.
"""
from __future__ import annotations

from itertools import product

import sympy


def _rat(s):
    return sympy.Rational(str(s))


def structure(entry, point):
    """Parities and structure constants c[i][j][k] as sympy Rationals."""
    labels = ["e1", "e2", "e3", "e4"]
    n = len(labels)
    par = [int(p) for p in entry.parities]
    c = [[[sympy.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for (a, b), rhs in entry.brackets.items():
        i, j = labels.index(a), labels.index(b)
        s = -(-1) ** (par[i] * par[j])
        for k, coeff in rhs.items():
            v = _rat(coeff.subs(point) if point else coeff)
            c[i][j][labels.index(k)] = v
            c[j][i][labels.index(k)] = s * v
    return par, c


def closed_forms(par, c, parity):
    """General closed anti-symmetric form of one parity: (value matrix, free symbols)."""
    n = len(par)
    W = [[sympy.Integer(0)] * n for _ in range(n)]
    syms = []
    for i in range(n):
        for j in range(i, n):
            if (par[i] + par[j]) % 2 != parity:
                continue
            if i == j and par[i] == 0:
                continue  # w(x,x) = -w(x,x) for even x
            t = sympy.Symbol(f"w{i}{j}")
            syms.append(t)
            W[i][j] = t
            if i != j:
                W[j][i] = -(-1) ** (par[i] * par[j]) * t
    if not syms:
        return W, []

    def w(a, vec):
        return sum(W[a][b] * vec[b] for b in range(n))

    eqs = set()
    for x, y, z in product(range(n), repeat=3):
        e = sympy.expand(
            (-1) ** (par[x] * par[z]) * w(x, c[y][z])
            + (-1) ** (par[z] * par[y]) * w(z, c[x][y])
            + (-1) ** (par[y] * par[x]) * w(y, c[z][x])
        )
        if e != 0:
            eqs.add(e)
    if eqs:
        sol = list(sympy.linsolve(list(eqs), syms))[0]
        sub = dict(zip(syms, sol))
        W = [[sympy.expand(x.subs(sub)) for x in r] for r in W]
        free = sorted(set().union(*[x.free_symbols for r in W for x in r]), key=str)
    else:
        free = syms
    return W, free


def verdict(entry, point=None):
    """'even', 'odd', 'both', 'NH-only' or 'none' by brute force."""
    par, c = structure(entry, point or {})
    We, fe = closed_forms(par, c, 0)
    Wo, fo = closed_forms(par, c, 1)
    even = bool(fe) and sympy.expand(sympy.Matrix(We).det()) != 0
    odd = bool(fo) and sympy.expand(sympy.Matrix(Wo).det()) != 0
    if even and odd:
        return "both", len(fe), len(fo)
    if even or odd:
        return ("even" if even else "odd"), len(fe), len(fo)
    total = sympy.Matrix(We) + sympy.Matrix(Wo)
    nh = sympy.expand(total.det()) != 0
    return ("NH-only" if nh else "none"), len(fe), len(fo)
