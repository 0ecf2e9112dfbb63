"""Hypothesis strategies shared by the property tests."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from superqf.scalar import Scalar, parse_scalar
from superqf.superspace import BilForm, Parity, SuperSpace

PARAMS = ("p", "q", "lambda")

small_fraction = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
nonzero_fraction = small_fraction.filter(bool)


@st.composite
def polynomials(draw, max_terms=3):
    s = parse_scalar(str(draw(small_fraction)))
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(nonzero_fraction)
        mono = parse_scalar(str(c))
        for name in draw(st.lists(st.sampled_from(PARAMS), max_size=2)):
            mono = mono * Scalar.param(name)
        s = s + mono
    return s


@st.composite
def scalars(draw):
    num = draw(polynomials())
    den = draw(polynomials().filter(lambda d: not d.is_zero()))
    return num / den


@st.composite
def superspaces(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    parities = draw(st.lists(st.sampled_from([0, 1]), min_size=n, max_size=n))
    return SuperSpace(tuple(f"e{i + 1}" for i in range(n)), tuple(parities))


@st.composite
def homogeneous_forms(draw, space=None, parity=None):
    V = space if space is not None else draw(superspaces())
    par = draw(st.sampled_from([0, 1])) if parity is None else parity
    n = V.dim
    vals = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if (int(V.parity(i)) + int(V.parity(j))) % 2 == par:
                vals[i][j] = draw(small_fraction)
    return BilForm.from_values(V, Parity(par), vals)


# ---------------------------------------------------------------------------
# random associative superalgebras: small seeds under a random homogeneous
# change of basis
# ---------------------------------------------------------------------------

def _grassmann2():
    # 1, x1, x2, x1x2
    t = {(0, j): {j: 1} for j in range(4)}
    t.update({(j, 0): {j: 1} for j in range(1, 4)})
    t[(1, 2)] = {3: 1}
    t[(2, 1)] = {3: -1}
    return (0, 1, 1, 0), t


def _matrices11():
    # E11, E22 even; E12, E21 odd
    idx = {(1, 1): 0, (2, 2): 1, (1, 2): 2, (2, 1): 3}
    t = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                t[(a, b)] = {idx[(i, l)]: 1}
    return (0, 0, 1, 1), t


def _upper_triangular():
    # E11, E12, E22, all even
    return (0, 0, 0), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}


def _truncated():
    # 1, x, x^2 with x^3 = 0
    t = {}
    for a in range(3):
        for b in range(3):
            if a + b < 3:
                t[(a, b)] = {a + b: 1}
    return (0, 0, 0), t


def _odd_dual_numbers():
    # 1, t even; u, tu odd; t^2 = 0, u^2 = 0, supercommutative
    t = {(0, j): {j: 1} for j in range(4)}
    t.update({(j, 0): {j: 1} for j in range(1, 4)})
    t[(1, 2)] = {3: 1}
    t[(2, 1)] = {3: 1}
    return (0, 0, 1, 1), t


def _half_matrices():
    # E11 even, E12 odd
    return (0, 1), {(0, 0): {0: 1}, (0, 1): {1: 1}}


def _null(parities):
    return tuple(parities), {}


SEEDS = (_grassmann2, _matrices11, _upper_triangular, _truncated, _odd_dual_numbers, _half_matrices)


def _frac_inverse(P):
    n = len(P)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(P)]
    for c in range(n):
        pr = next((r for r in range(c, n) if aug[r][c]), None)
        if pr is None:
            return None
        aug[c], aug[pr] = aug[pr], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[n:] for r in aug]


@st.composite
def associative_superalgebras(draw):
    """(SuperSpace, m) with m[i][j][k] Fractions of an associative even product."""
    if draw(st.integers(0, 6)) == 0:
        pars, table = _null(draw(st.lists(st.sampled_from([0, 1]), min_size=1, max_size=4)))
    else:
        pars, table = draw(st.sampled_from(SEEDS))()
    n = len(pars)
    # random homogeneous change of basis P = lower * upper, invertible by construction
    lower = [[Fraction(0)] * n for _ in range(n)]
    upper = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        lower[k][k] = draw(nonzero_fraction)
        upper[k][k] = Fraction(1)
        for a in range(n):
            if pars[k] == pars[a] and k > a:
                lower[k][a] = draw(small_fraction)
                upper[a][k] = draw(small_fraction)
    P = [[sum(lower[k][j] * upper[j][a] for j in range(n)) for a in range(n)] for k in range(n)]
    Pinv = _frac_inverse(P)
    perm = draw(st.permutations(range(n)))
    base = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (a, b), rhs in table.items():
        for k, c in rhs.items():
            base[a][b][k] += Fraction(c)
    m = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod_e = [Fraction(0)] * n
            for k in range(n):
                if not P[k][a]:
                    continue
                for l in range(n):
                    if not P[l][b]:
                        continue
                    f = P[k][a] * P[l][b]
                    for r in range(n):
                        if base[k][l][r]:
                            prod_e[r] += f * base[k][l][r]
            coords = [sum(Pinv[r][s] * prod_e[s] for s in range(n)) for r in range(n)]
            m[perm[a]][perm[b]] = [Fraction(0)] * n
            for r in range(n):
                m[perm[a]][perm[b]][perm[r]] = coords[r]
    parities = [0] * n
    for a in range(n):
        parities[perm[a]] = pars[a]
    V = SuperSpace(tuple(f"e{i + 1}" for i in range(n)), tuple(parities))
    return V, m
