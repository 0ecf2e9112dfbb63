"""Lie superalgebra structures, closed 2-forms and quasi-Frobenius classification."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import linalg
from .checks import CheckReport
from .scalar import ONE, ZERO, MultiPoly, as_scalar
from .superspace import (
    BilForm,
    DegenerateForm,
    DimensionMismatch,
    MixedParityTerm,
    Parity,
    SubSpace,
    SuperSpace,
    form_determinant,
    is_antisymmetric,
    orthogonal_complement,
    sign,
)


class ParametricUnsupported(ValueError):
    pass


class EmptyRegion(ValueError):
    pass


class LieSuperStructure:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""

    def __init__(self, space: SuperSpace, c=None):
        self.space = space
        n = space.dim
        self.c = c if c is not None else [[[ZERO] * n for _ in range(n)] for _ in range(n)]

    @classmethod
    def from_brackets(cls, space: SuperSpace, brackets, check=True) -> "LieSuperStructure":
        """Build from ``{(i, j): {k: coeff}}``; partners [e_j, e_i] are filled in.

        Indices may be labels or positions.  A conflict between a stated
        bracket and the one implied by super anti-commutativity raises.
        """
        n = space.dim
        L = cls(space)
        stated = {}
        for (i, j), rhs in brackets.items():
            i = space.index(i) if isinstance(i, str) else i
            j = space.index(j) if isinstance(j, str) else j
            vec = [ZERO] * n
            for k, coeff in rhs.items():
                k = space.index(k) if isinstance(k, str) else k
                vec[k] = vec[k] + as_scalar(coeff)
            if check:
                for k in range(n):
                    if vec[k] and space.parity(k) != space.parity(i) + space.parity(j):
                        raise MixedParityTerm(
                            f"[{space.labels[i]},{space.labels[j]}] has a component on "
                            f"{space.labels[k]} of the wrong parity"
                        )
            s = -sign(space.parity(i) * space.parity(j))
            partner = [s * x for x in vec]
            for (a, b), v in (((i, j), vec), ((j, i), partner)):
                if (a, b) in stated and stated[(a, b)] != v:
                    raise ValueError(
                        f"bracket [{space.labels[a]},{space.labels[b]}] conflicts with its partner"
                    )
                stated[(a, b)] = v
        for (a, b), v in stated.items():
            L.c[a][b] = list(v)
        return L

    @property
    def dim(self):
        return self.space.dim

    def bracket_basis(self, i: int, j: int):
        return self.c[i][j]

    def bracket(self, x, y):
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("vector length differs from the algebra dimension")
        out = [ZERO] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                cij = self.c[i][j]
                f = x[i] * y[j]
                for k in range(n):
                    if cij[k]:
                        out[k] = out[k] + f * cij[k]
        return out

    def brackets_dict(self):
        """Nonzero brackets [e_i, e_j] for i <= j, as {(label, label): {label: scalar}}."""
        out = {}
        lab = self.space.labels
        for i in range(self.dim):
            for j in range(i, self.dim):
                v = self.c[i][j]
                if any(v):
                    out[(lab[i], lab[j])] = {lab[k]: v[k] for k in range(self.dim) if v[k]}
        return out

    def parameters(self) -> set:
        return {p for a in self.c for b in a for x in b for p in x.parameters()}

    def is_parametric(self) -> bool:
        return bool(self.parameters())

    def subs(self, assignment) -> "LieSuperStructure":
        return LieSuperStructure(
            self.space, [[[x.subs(assignment) for x in b] for b in a] for a in self.c]
        )

    def __eq__(self, other):
        return isinstance(other, LieSuperStructure) and self.space == other.space and self.c == other.c


def abelian(space: SuperSpace) -> LieSuperStructure:
    return LieSuperStructure(space)


def check_anticommutativity(L: LieSuperStructure) -> CheckReport:
    rep = CheckReport("anticommutativity")
    V = L.space
    for i, j in product(range(L.dim), repeat=2):
        s = -sign(V.parity(i) * V.parity(j))
        if any(a != s * b for a, b in zip(L.c[i][j], L.c[j][i])):
            rep.fail({"pair": [V.labels[i], V.labels[j]]})
        for k in range(L.dim):
            if L.c[i][j][k] and V.parity(k) != V.parity(i) + V.parity(j):
                rep.fail({"pair": [V.labels[i], V.labels[j]], "parity": V.labels[k]})
    return rep


def jacobi_residual(L: LieSuperStructure, i: int, j: int, k: int):
    """[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]] on basis vectors."""
    V = L.space
    ex, ey, ez = V.basis_vector(i), V.basis_vector(j), V.basis_vector(k)
    a = L.bracket(ex, L.bracket(ey, ez))
    b = L.bracket(L.bracket(ex, ey), ez)
    c = L.bracket(ey, L.bracket(ex, ez))
    s = sign(V.parity(i) * V.parity(j))
    return [x - y - s * z for x, y, z in zip(a, b, c)]


def check_jacobi(L: LieSuperStructure) -> CheckReport:
    rep = CheckReport("jacobi")
    V = L.space
    for i, j, k in product(range(L.dim), repeat=3):
        r = jacobi_residual(L, i, j, k)
        if any(r):
            rep.fail({"triple": [V.labels[i], V.labels[j], V.labels[k]], "residual": V.sparse(r)})
    return rep


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def closedness_residual(L: LieSuperStructure, values, i: int, j: int, k: int):
    """Signed cyclic sum for omega given by its value matrix, on basis x,y,z."""
    V = L.space
    px, py, pz = V.parity(i), V.parity(j), V.parity(k)
    n = L.dim

    def w(a, vec):
        row = values[a]
        total = ZERO
        for b in range(n):
            if vec[b] and row[b]:
                total = total + row[b] * vec[b]
        return total

    return (
        sign(px * pz) * w(i, L.c[j][k])
        + sign(pz * py) * w(k, L.c[i][j])
        + sign(py * px) * w(j, L.c[k][i])
    )


def closed_failures(L: LieSuperStructure, omega):
    values = omega.values()
    V = L.space
    out = []
    for i, j, k in product(range(L.dim), repeat=3):
        r = closedness_residual(L, values, i, j, k)
        if r:
            out.append({"triple": [V.labels[i], V.labels[j], V.labels[k]], "residual": str(r)})
    return out


def is_closed(L: LieSuperStructure, omega) -> bool:
    return not closed_failures(L, omega)


def _antisym_unknowns(V: SuperSpace, parity: Parity):
    """Free entries (i, j) of an anti-symmetric form of the given parity."""
    slots = []
    for i in range(V.dim):
        for j in range(i, V.dim):
            if V.parity(i) + V.parity(j) != parity:
                continue
            if i == j and V.parity(i) == Parity.EVEN:
                continue
            slots.append((i, j))
    return slots


def _values_from_slots(V, slots, coeffs):
    n = V.dim
    vals = [[ZERO] * n for _ in range(n)]
    for (i, j), c in zip(slots, coeffs):
        if not c:
            continue
        vals[i][j] = vals[i][j] + c
        if i != j:
            vals[j][i] = vals[j][i] - sign(V.parity(i) * V.parity(j)) * c
    return vals


@dataclass
class CocycleSpace:
    parity: Parity
    basis: list = field(default_factory=list)

    @property
    def dim(self):
        return len(self.basis)


def closed_form_space(L: LieSuperStructure, parity) -> CocycleSpace:
    """Basis of closed anti-symmetric forms of one parity (parameter-free input)."""
    parity = Parity(int(parity))
    if L.is_parametric():
        raise ParametricUnsupported("fix the parameters at a sample point first")
    V = L.space
    slots = _antisym_unknowns(V, parity)
    if not slots:
        return CocycleSpace(parity, [])
    m = len(slots)
    eqs = []
    for i, j, k in product(range(V.dim), repeat=3):
        row = []
        for s in range(m):
            unit = [ZERO] * m
            unit[s] = ONE
            vals = _values_from_slots(V, slots, unit)
            row.append(closedness_residual(L, vals, i, j, k))
        if any(row):
            eqs.append(row)
    if eqs:
        null = linalg.nullspace(eqs, m, zero=ZERO, one=ONE)
    else:
        null = [[ONE if a == b else ZERO for a in range(m)] for b in range(m)]
    basis = [BilForm.from_values(V, parity, _values_from_slots(V, slots, v)) for v in null]
    return CocycleSpace(parity, basis)


def generic_determinant(forms) -> MultiPoly:
    """det(sum_k c_k * form_k) as a polynomial in the c_k (constant forms only)."""
    if not forms:
        return MultiPoly(nvars=1)
    m = len(forms)
    n = forms[0].space.dim
    vals = [f.values() for f in forms]
    entries = []
    for a in range(n):
        row = []
        for b in range(n):
            terms = {}
            for k in range(m):
                x = vals[k][a][b]
                if x:
                    e = [0] * m
                    e[k] = 1
                    terms[tuple(e)] = x.constant_value()
            row.append(MultiPoly(terms, m))
        entries.append(row)
    zero = MultiPoly(nvars=m)
    one = MultiPoly.const(1, m)
    return linalg.det_cofactor(entries, zero, one)


def has_nondegenerate_member(forms) -> bool:
    return not generic_determinant(forms).is_zero()


def _homogeneous_verdict(even_ok, odd_ok):
    if even_ok and odd_ok:
        return "both"
    if even_ok:
        return "even"
    if odd_ok:
        return "odd"
    return None


def classify_at_point(L: LieSuperStructure) -> dict:
    """Verdict for a parameter-free structure, with the cocycle dimensions."""
    ev = closed_form_space(L, Parity.EVEN)
    od = closed_form_space(L, Parity.ODD)
    even_ok = has_nondegenerate_member(ev.basis)
    odd_ok = has_nondegenerate_member(od.basis)
    verdict = _homogeneous_verdict(even_ok, odd_ok)
    nh_ok = False
    if verdict is None:
        nh_ok = has_nondegenerate_member(_sum_forms(ev.basis, od.basis))
        verdict = "NH-only" if nh_ok else "none"
    return {
        "verdict": verdict,
        "dim_even": ev.dim,
        "dim_odd": od.dim,
        "nh_possible": nh_ok,
    }


class _SumForm:
    """Even and odd closed forms embedded in one list for the NH test."""

    def __init__(self, form):
        self.space = form.space
        self._vals = form.values()

    def values(self):
        return self._vals


def _sum_forms(even_basis, odd_basis):
    return [_SumForm(f) for f in even_basis] + [_SumForm(f) for f in odd_basis]


def quasi_frobenius_classify(L: LieSuperStructure, samples=()) -> dict:
    """Per-point verdicts; a parametric structure needs sample points."""
    if not L.is_parametric():
        res = classify_at_point(L)
        return {"verdict": res["verdict"], "points": [{"point": {}, **res}]}
    samples = list(samples)
    if not samples:
        raise EmptyRegion("parametric structure classified without sample points")
    points = []
    for pt in samples:
        res = classify_at_point(L.subs(pt))
        points.append({"point": {k: str(Fraction(v)) for k, v in pt.items()}, **res})
    verdicts = {p["verdict"] for p in points}
    verdict = verdicts.pop() if len(verdicts) == 1 else "mixed"
    return {"verdict": verdict, "points": points}


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def is_ideal(L: LieSuperStructure, S: SubSpace) -> bool:
    for i in range(L.dim):
        ei = L.space.basis_vector(i)
        for row in S.rows:
            if not S.contains(L.bracket(ei, row)):
                return False
    return True


def is_lagrangian_ideal(L: LieSuperStructure, S: SubSpace, omega) -> bool:
    if form_determinant(omega).is_zero():
        raise DegenerateForm("Lagrangian test needs a non-degenerate form")
    return is_ideal(L, S) and orthogonal_complement(S, omega) == S


def is_exact(L: LieSuperStructure, omega):
    """Functional f with omega(x, y) = f([x, y]) on basis pairs, or None."""
    n = L.dim
    vals = omega.values()
    rows, rhs = [], []
    for i, j in product(range(n), repeat=2):
        rows.append(list(L.c[i][j]))
        rhs.append(vals[i][j])
    return linalg.solve(rows, rhs, zero=ZERO)


def antisymmetric_check(omega) -> bool:
    return is_antisymmetric(omega)
