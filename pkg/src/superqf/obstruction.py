"""Certificate replay for the non-existence of compatible Novikov products.

The unknown product on a 2|2 space has one formal coefficient
``l{k}_{ij}`` for every pair (i, j) and every basis index k of the parity
|e_i| + |e_j|, i.e. 32 unknowns.  Coefficients are polynomials in these
unknowns; the replay keeps an affine constraint store and checks that each
scripted step is an affine consequence of it.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .lie import LieSuperStructure
from .lsa import ProductTable, n_functional, t_functional
from .scalar import MultiPoly, Scalar
from .superspace import SuperSpace, sign


class ObstructionError(Exception):
    pass


class UnknownCertificate(ObstructionError, KeyError):
    pass


class NonAffineExpression(ObstructionError):
    pass


class StepNotImplied(ObstructionError):
    pass


class InconsistentConstraints(ObstructionError):
    pass


def _scalar_to_fraction(c) -> Fraction:
    if isinstance(c, Scalar):
        if c.parameters():
            raise ObstructionError("unknown products need parameter-free brackets")
        return c.constant_value() if hasattr(c, "constant_value") else Fraction(str(c))
    return Fraction(c)


class UnknownProduct:
    """A product table whose entries are formal unknowns plus a constraint store."""

    def __init__(self, space: SuperSpace):
        self.space = space
        n = space.dim
        self.names: list[str] = []
        self.index: dict[tuple, int] = {}
        for i, j in product(range(n), repeat=2):
            par = space.parity(i) + space.parity(j)
            for k in range(n):
                if space.parity(k) == par:
                    self.index[(k, i, j)] = len(self.names)
                    self.names.append(f"l{space.labels[k][1:]}_{space.labels[i][1:]}{space.labels[j][1:]}")
        self.nvars = len(self.names)
        zero = MultiPoly.const(0, self.nvars)
        m = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for (k, i, j), v in self.index.items():
            m[i][j][k] = MultiPoly.var(v, self.nvars)
        self.table = ProductTable(space, m, zero=zero, check=False)
        # pivot variable -> affine expression in the non-pivot variables
        self.store: dict[int, MultiPoly] = {}

    # -- unknown handling ---------------------------------------------------
    def var(self, name: str) -> MultiPoly:
        return MultiPoly.var(self.names.index(name), self.nvars)

    def const(self, c) -> MultiPoly:
        return MultiPoly.const(Fraction(c), self.nvars)

    def reduce(self, expr: MultiPoly) -> MultiPoly:
        if not self.store:
            return expr
        return expr.substitute(self.store)

    def format(self, expr: MultiPoly) -> str:
        return expr.format(self.names)

    def add(self, expr: MultiPoly) -> bool:
        """Impose expr = 0.  Returns False if the equation was already implied."""
        e = self.reduce(expr)
        if not e:
            return False
        if e.degree() > 1:
            raise NonAffineExpression(f"{self.format(e)} = 0 is not affine")
        if e.is_constant():
            raise InconsistentConstraints(f"constraint store implies {self.format(e)} = 0")
        pivot = max(e.variables())
        exp = [0] * self.nvars
        exp[pivot] = 1
        c = e.terms[tuple(exp)]
        rest = e - MultiPoly.var(pivot, self.nvars) * c
        value = rest * (-1 / c)
        self.store = {v: x.substitute({pivot: value}) for v, x in self.store.items()}
        self.store[pivot] = value
        return True

    def implies(self, expr: MultiPoly) -> bool:
        return not self.reduce(expr)

    def value_of(self, name: str):
        """The value forced by the store for one unknown, or None if free."""
        e = self.reduce(self.var(name))
        return e.constant_value() if e.is_constant() else None

    def affine_vector(self, vec) -> list:
        out = [self.reduce(c) for c in vec]
        for c in out:
            if c.degree() > 1:
                raise NonAffineExpression(f"quadratic terms survive: {self.format(c)}")
        return out

    # -- compatibility -----------------------------------------------------
    def compatibility_equations(self, L: LieSuperStructure) -> list[MultiPoly]:
        """x.y - (-1)^{|x||y|} y.x - [x,y] = 0 for i <= j, one equation per component."""
        V = self.space
        m = self.table.m
        eqs = []
        for i in range(V.dim):
            for j in range(i, V.dim):
                s = sign(V.parity(i) * V.parity(j))
                for k in range(V.dim):
                    e = m[i][j][k] - m[j][i][k] * s - self.const(_scalar_to_fraction(L.c[i][j][k]))
                    if e:
                        eqs.append(e)
        return eqs


# -- the scripted elimination ------------------------------------------------

# (functional, (x, y, z), claimed values).  Each claim is a pair of unknown
# names and rational values.
ELIMINATION_SCRIPT = (
    ("N", ("e4", "e4", "e4"), {"l3_14": 0, "l4_14": 0}),
    ("N", ("e4", "e1", "e4"), {"l1_11": 0, "l2_11": 0}),
    ("N", ("e1", "e3", "e1"), {"l3_31": 0, "l4_13": 0}),
    ("T", ("e2", "e1", "e2"), {"l2_21": 0, "l1_12": 0, "l1_22": 0, "l2_22": 0}),
    ("N", ("e4", "e2", "e1"), {"l4_24": 0, "l3_42": -1}),
    ("N", ("e4", "e2", "e4"), {"l1_34": 0, "l2_43": 0}),
)
TERMINAL = ("N", ("e3", "e4", "e4"))

# The displayed compatibility block for the first algebra, as (lhs, rhs)
# pairs read "lhs = rhs" with rhs a dict of unknowns plus a constant.
DISPLAYED_COMPATIBILITY = (
    ("l3_13", {"l3_31": 1, 1: 1}),
    ("l4_13", {"l4_31": 1}),
    ("l2_12", {"l2_21": 1, 1: 1}),
    ("l1_21", {"l1_12": 1}),
    ("l3_41", {"l3_14": 1}),
    ("l4_41", {"l4_14": 1}),
    ("l3_24", {"l3_42": 1, 1: 1}),
    ("l4_42", {"l4_24": 1}),
    ("l3_32", {"l3_23": 1}),
    ("l4_32", {"l4_23": 1}),
    ("l1_33", {}),
    ("l2_33", {}),
    ("l1_44", {1: Fraction(1, 2)}),
    ("l2_44", {}),
    ("l2_34", {"l2_43": -1, 1: Fraction(-1, 2)}),
    ("l1_43", {"l1_34": -1}),
)

CERTIFIED_ENTRIES = ("D10_0^1", "D10_0^2")


def _functional(U: UnknownProduct, kind: str, labels):
    i, j, k = (U.space.index(a) for a in labels)
    f = n_functional if kind == "N" else t_functional
    return f(U.table, i, j, k)


def _vec_str(U, vec):
    return {U.space.labels[k]: U.format(c) for k, c in enumerate(vec) if c}


def _equation(U: UnknownProduct, lhs: str, rhs: dict) -> MultiPoly:
    e = U.var(lhs)
    for name, c in rhs.items():
        e = e - (U.const(c) if name == 1 else U.var(name) * Fraction(c))
    return e


def _all_implied(space, source, targets) -> bool:
    B = UnknownProduct(space)
    for e in source:
        B.add(e)
    return all(B.implies(e) for e in targets)


def novikov_obstruction_replay(entry_id: str, algebra: LieSuperStructure, strict: bool = False) -> dict:
    """Replay the scripted elimination against ``algebra``.

    Each step first imposes the affine components of its functional.  A
    claimed value that the store then forces is recorded as ``implied``.
    A claim that is merely consistent with the store is adopted as a case
    choice and recorded as ``branch``; with ``strict=True`` it raises
    :class:`StepNotImplied` instead.  A claim contradicting the store always
    raises.  Quadratic components must become affine once the step's claims
    are imposed, otherwise :class:`NonAffineExpression` is raised.

    The displayed compatibility block is compared with the store for the
    first certified algebra only.
    """
    if entry_id not in CERTIFIED_ENTRIES:
        raise UnknownCertificate(entry_id)
    U = UnknownProduct(algebra.space)
    compat = U.compatibility_equations(algebra)
    for e in compat:
        U.add(e)
    report = {"entry": entry_id, "unknowns": U.nvars, "compatibility_equations": len(compat)}
    if entry_id == CERTIFIED_ENTRIES[0]:
        displayed = [_equation(U, lhs, rhs) for lhs, rhs in DISPLAYED_COMPATIBILITY]
        report["displayed_compatibility_matches"] = (
            _all_implied(U.space, compat, displayed) and _all_implied(U.space, displayed, compat)
        )
    steps = []
    for kind, labels, claims in ELIMINATION_SCRIPT:
        name = f"{kind}({', '.join(labels)})"
        vec = [U.reduce(c) for c in _functional(U, kind, labels)]
        for c in vec:
            if c.degree() <= 1:
                U.add(c)
        status = {}
        for var, val in claims.items():
            forced = U.value_of(var)
            if forced == Fraction(val):
                status[var] = "implied"
                continue
            if strict:
                raise StepNotImplied(f"{name}: {var} = {val} is not a consequence of the store")
            try:
                U.add(U.var(var) - val)
            except InconsistentConstraints as exc:
                raise StepNotImplied(f"{name}: {var} = {val} contradicts the store") from exc
            status[var] = "branch"
        for c in vec:
            U.add(c)
        steps.append({"functional": name, "claims": {k: str(v) for k, v in claims.items()}, "status": status})
    report["steps"] = steps
    report["all_implied"] = all(v == "implied" for st in steps for v in st["status"].values())
    kind, labels = TERMINAL
    value = U.affine_vector(_functional(U, kind, labels))
    if any(not c.is_constant() for c in value):
        raise StepNotImplied(f"terminal value still depends on unknowns: {_vec_str(U, value)}")
    consts = [c.constant_value() for c in value]
    e3 = U.space.index("e3")
    if any(c for k, c in enumerate(consts) if k != e3) or not consts[e3]:
        raise StepNotImplied(f"terminal value is not a nonzero multiple of e3: {_vec_str(U, value)}")
    report["terminal"] = {"functional": f"{kind}({', '.join(labels)})", "e3_coefficient": str(consts[e3])}
    return report


def novikov_system(algebra: LieSuperStructure, same_parity_only: bool = False):
    """Compatibility, left-symmetry and right-multiplication equations over the unknowns."""
    U = UnknownProduct(algebra.space)
    V = algebra.space
    eqs = list(U.compatibility_equations(algebra))
    for i, j, k in product(range(V.dim), repeat=3):
        eqs.extend(c for c in t_functional(U.table, i, j, k) if c)
        if not same_parity_only or V.parity(i) == V.parity(j):
            eqs.extend(c for c in n_functional(U.table, i, j, k) if c)
    return U, eqs


def groebner_nonexistence(algebra: LieSuperStructure, same_parity_only: bool = False) -> bool:
    """True iff the reduced Groebner basis of the Novikov system is {1}.

    That is the complete certificate that no compatible Novikov product
    exists, even over the complex numbers.
    """
    import sympy

    U, eqs = novikov_system(algebra, same_parity_only)
    syms = sympy.symbols(U.names)

    def conv(poly):
        return sympy.Add(*[
            sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x**k for x, k in zip(syms, e) if k])
            for e, c in poly.terms.items()
        ])

    basis = sympy.groebner([conv(e) for e in eqs], *syms, order="grevlex")
    return list(basis.exprs) == [1]
