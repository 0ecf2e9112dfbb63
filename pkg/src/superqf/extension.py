"""Connections, dual representations, and T*/Pi T* Lagrangian extensions.

A connection is stored as a tensor ``gamma[i][j][k]`` with
``nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k``.  For a flat connection the
dual representation on h* is

    rho(e_i) e_j^* = -(-1)^{|i||j|} sum_k gamma[i][k][j] e_k^*,

and on Pi(h*) the action picks up an extra (-1)^{|i|}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .checks import CheckReport
from .lie import LieSuperStructure, check_jacobi, closed_failures, is_ideal
from .scalar import ONE, ZERO, as_scalar
from .superspace import (
    BilForm,
    LinearMap,
    MixedParityTerm,
    Parity,
    SubSpace,
    SuperSpace,
    form_determinant,
    is_antisymmetric,
    orthogonal_complement,
    sign,
    wedge_values,
)


class NotStronglyPolarized(ValueError):
    pass


class NotBijective(ValueError):
    pass


class ExtensionPreconditionFailed(ValueError):
    def __init__(self, check, report=None):
        super().__init__(f"extension precondition failed: {check}")
        self.check = check
        self.report = report


# ---------------------------------------------------------------------------
# connections
# ---------------------------------------------------------------------------

class Connection:
    def __init__(self, algebra: LieSuperStructure, gamma=None):
        self.algebra = algebra
        n = algebra.dim
        self.gamma = gamma if gamma is not None else [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        V = algebra.space
        for i, j, k in product(range(n), repeat=3):
            if self.gamma[i][j][k] and V.parity(k) != V.parity(i) + V.parity(j):
                raise MixedParityTerm(
                    f"nabla_{V.labels[i]} {V.labels[j]} has an {V.labels[k]} component of the wrong parity"
                )

    @classmethod
    def from_terms(cls, algebra, terms):
        """``terms``: {(u, v): {k: coeff}} with labels or indices."""
        V = algebra.space
        n = V.dim
        gamma = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (u, v), rhs in terms.items():
            i = V.index(u) if isinstance(u, str) else u
            j = V.index(v) if isinstance(v, str) else v
            for k, c in rhs.items():
                kk = V.index(k) if isinstance(k, str) else k
                gamma[i][j][kk] = gamma[i][j][kk] + as_scalar(c)
        return cls(algebra, gamma)

    def apply(self, x, y):
        n = self.algebra.dim
        out = [ZERO] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                f = x[i] * y[j]
                g = self.gamma[i][j]
                for k in range(n):
                    if g[k]:
                        out[k] = out[k] + f * g[k]
        return out

    def __eq__(self, other):
        return isinstance(other, Connection) and self.gamma == other.gamma


def torsion(nabla: Connection, x, y, px: int, py: int):
    """nabla_x y - (-1)^{|x||y|} nabla_y x - [x, y] for homogeneous x, y."""
    a = nabla.apply(x, y)
    b = nabla.apply(y, x)
    c = nabla.algebra.bracket(x, y)
    s = sign(px * py)
    return [u - s * v - w for u, v, w in zip(a, b, c)]


def curvature(nabla: Connection, x, y, z, px: int, py: int):
    """nabla_x nabla_y z - (-1)^{|x||y|} nabla_y nabla_x z - nabla_[x,y] z."""
    a = nabla.apply(x, nabla.apply(y, z))
    b = nabla.apply(y, nabla.apply(x, z))
    c = nabla.apply(nabla.algebra.bracket(x, y), z)
    s = sign(px * py)
    return [u - s * v - w for u, v, w in zip(a, b, c)]


def torsion_report(nabla: Connection) -> CheckReport:
    rep = CheckReport("torsion-free")
    V = nabla.algebra.space
    for i, j in product(range(V.dim), repeat=2):
        t = torsion(nabla, V.basis_vector(i), V.basis_vector(j), V.parity(i), V.parity(j))
        if any(t):
            rep.fail({"pair": [V.labels[i], V.labels[j]], "torsion": {k: str(v) for k, v in V.sparse(t).items()}})
    return rep


def curvature_report(nabla: Connection) -> CheckReport:
    rep = CheckReport("flat")
    V = nabla.algebra.space
    for i, j, k in product(range(V.dim), repeat=3):
        r = curvature(nabla, V.basis_vector(i), V.basis_vector(j), V.basis_vector(k), V.parity(i), V.parity(j))
        if any(r):
            rep.fail(
                {"triple": [V.labels[i], V.labels[j], V.labels[k]], "curvature": {a: str(b) for a, b in V.sparse(r).items()}}
            )
    return rep


def is_torsion_free(nabla: Connection) -> bool:
    return torsion_report(nabla).ok


def is_flat(nabla: Connection) -> bool:
    return curvature_report(nabla).ok


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

@dataclass
class Representation:
    """Action matrices (row = output coordinate) of each algebra basis vector."""

    algebra: LieSuperStructure
    module: SuperSpace
    action: list = field(default_factory=list)

    def act(self, i: int, v):
        return linalg.matvec(self.action[i], list(v))

    def act_vector(self, x, v):
        out = [ZERO] * self.module.dim
        for i, c in enumerate(x):
            if c:
                w = self.act(i, v)
                out = [a + c * b for a, b in zip(out, w)]
        return out

    def as_maps(self):
        A = self.algebra.space
        return [
            LinearMap(self.module, self.module, self.action[i], A.parity(i)) for i in range(A.dim)
        ]


def dual_rep(nabla: Connection) -> Representation:
    A = nabla.algebra.space
    n = A.dim
    module = SuperSpace(tuple(f"{lab}*" for lab in A.labels), A.parities)
    mats = []
    for i in range(n):
        M = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            s = -sign(A.parity(i) * A.parity(j))
            for k in range(n):
                g = nabla.gamma[i][k][j]
                if g:
                    M[k][j] = s * g
        mats.append(M)
    return Representation(nabla.algebra, module, mats)


def pi_dual_rep(nabla: Connection) -> Representation:
    rho = dual_rep(nabla)
    A = nabla.algebra.space
    module = SuperSpace(
        tuple(f"Pi({lab}*)" for lab in A.labels), tuple(Parity(1 - p) for p in A.parities)
    )
    mats = []
    for i, M in enumerate(rho.action):
        s = sign(A.parity(i))
        mats.append([[s * x for x in row] for row in M])
    return Representation(nabla.algebra, module, mats)


def check_representation(r: Representation, L: LieSuperStructure | None = None) -> CheckReport:
    """r([x,y]) = r(x) r(y) - (-1)^{|x||y|} r(y) r(x) on basis pairs."""
    L = L or r.algebra
    A = L.space
    rep = CheckReport("representation")
    n = A.dim
    for i, j in product(range(n), repeat=2):
        lhs = _combine(r.action, L.c[i][j], r.module.dim)
        ab = linalg.matmul(r.action[i], r.action[j])
        ba = linalg.matmul(r.action[j], r.action[i])
        s = sign(A.parity(i) * A.parity(j))
        rhs = [[a - s * b for a, b in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
        if lhs != rhs:
            rep.fail({"pair": [A.labels[i], A.labels[j]]})
    for i, M in enumerate(r.action):
        for a, b in product(range(r.module.dim), repeat=2):
            if M[a][b] and r.module.parity(a) != r.module.parity(b) + A.parity(i):
                rep.fail({"parity": [A.labels[i], r.module.labels[b], r.module.labels[a]]})
    return rep


def _combine(mats, coeffs, m):
    out = [[ZERO] * m for _ in range(m)]
    for c, M in zip(coeffs, mats):
        if c:
            out = [[a + c * b for a, b in zip(r1, r2)] for r1, r2 in zip(out, M)]
    return out


# ---------------------------------------------------------------------------
# cocycles
# ---------------------------------------------------------------------------

@dataclass
class ModuleCocycle:
    """alpha(e_i, e_j) as module vectors; target is 'dual' or 'pi-dual'."""

    values: list
    target: str = "dual"

    @classmethod
    def zero(cls, n: int, target="dual"):
        return cls([[[ZERO] * n for _ in range(n)] for _ in range(n)], target)

    @classmethod
    def from_terms(cls, base: SuperSpace, terms, target="dual"):
        """Sum of value (x) B where B is a wedge of dual basis vectors.

        ``terms``: list of (value, form_terms), value a {module-label: coeff}
        mapping over the labels ``u*`` (dual) or ``Pi(u*)`` (pi-dual), and
        form_terms a list of (coeff, i, j) read as coeff * e_i^* wedge e_j^*.
        """
        n = base.dim
        vals = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for value, form_terms in terms:
            B = wedge_values(form_terms, base)
            vec = [ZERO] * n
            for lab, c in value.items():
                vec[_module_index(base, lab)] += as_scalar(c)
            for a, b in product(range(n), repeat=2):
                if B[a][b]:
                    vals[a][b] = [x + B[a][b] * y for x, y in zip(vals[a][b], vec)]
        return cls(vals, target)

    def is_zero(self) -> bool:
        return not any(x for a in self.values for b in a for x in b)


def _module_index(base: SuperSpace, label: str) -> int:
    lab = label
    if lab.startswith("Pi(") and lab.endswith(")"):
        lab = lab[3:-1]
    if not lab.endswith("*"):
        raise KeyError(f"{label!r} is not a dual basis label")
    return base.index(lab[:-1])


def cocycle_condition(alpha: ModuleCocycle, L: LieSuperStructure, nabla: Connection) -> CheckReport:
    """Module 2-cocycle law, anti-symmetry, parity, and the cyclic scalar identity."""
    A = L.space
    n = A.dim
    rep = CheckReport("cocycle")
    r = dual_rep(nabla) if alpha.target == "dual" else pi_dual_rep(nabla)
    shift = 0 if alpha.target == "dual" else 1
    p = [int(A.parity(i)) for i in range(n)]
    val = alpha.values

    def alpha_vec(x, y):
        out = [ZERO] * n
        for a in range(n):
            if not x[a]:
                continue
            for b in range(n):
                if y[b] and x[a] * y[b]:
                    f = x[a] * y[b]
                    out = [o + f * v for o, v in zip(out, val[a][b])]
        return out

    for i, j in product(range(n), repeat=2):
        s = -sign(p[i] * p[j])
        if any(a != s * b for a, b in zip(val[i][j], val[j][i])):
            rep.fail({"law": "anti-symmetry", "pair": [A.labels[i], A.labels[j]]})
        for k in range(n):
            if val[i][j][k] and (p[k] + shift) % 2 != (p[i] + p[j]) % 2:
                rep.fail({"law": "parity", "pair": [A.labels[i], A.labels[j]]})

    e = [A.basis_vector(i) for i in range(n)]
    for u, v, w in product(range(n), repeat=3):
        t1 = r.act(u, val[v][w])
        t2 = alpha_vec(e[u], L.c[v][w])
        t3 = alpha_vec(L.c[u][v], e[w])
        t4 = r.act(w, val[u][v])
        t5 = r.act(v, val[u][w])
        t6 = alpha_vec(e[v], L.c[u][w])
        s4 = sign(p[w] * (p[u] + p[v]))
        s5 = sign(p[u] * p[v])
        res = [a + b - c + s4 * d - s5 * (f + g) for a, b, c, d, f, g in zip(t1, t2, t3, t4, t5, t6)]
        if any(res):
            rep.fail({"law": "module-cocycle", "triple": [A.labels[u], A.labels[v], A.labels[w]]})

    for u, v, w in product(range(n), repeat=3):
        total = (
            sign(p[u] * p[w]) * val[u][v][w]
            + sign(p[v] * p[u]) * val[v][w][u]
            + sign(p[w] * p[v]) * val[w][u][v]
        )
        if total:
            rep.fail({"law": "cyclic", "triple": [A.labels[u], A.labels[v], A.labels[w]], "value": str(total)})
    return rep


# ---------------------------------------------------------------------------
# extensions
# ---------------------------------------------------------------------------

@dataclass
class Extension:
    kind: str
    base: LieSuperStructure
    nabla: Connection
    cocycle: ModuleCocycle
    algebra: LieSuperStructure
    form: BilForm
    dual_ideal: SubSpace
    base_complement: SubSpace

    @property
    def space(self):
        return self.algebra.space


def _extend(h: LieSuperStructure, nabla: Connection, cocycle: ModuleCocycle, kind: str, check: bool):
    A = h.space
    n = A.dim
    if kind == "t-star":
        r = dual_rep(nabla)
        fparity = Parity.EVEN
    else:
        r = pi_dual_rep(nabla)
        fparity = Parity.ODD
    if check:
        for rep in (torsion_report(nabla), curvature_report(nabla), cocycle_condition(cocycle, h, nabla)):
            if not rep.ok:
                raise ExtensionPreconditionFailed(rep.name, rep)
    M = r.module
    space = SuperSpace(A.labels + M.labels, A.parities + M.parities)
    N = 2 * n
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        c[i][j] = list(h.c[i][j]) + list(cocycle.values[i][j])
    for i, j in product(range(n), repeat=2):
        col = [r.action[i][k][j] for k in range(n)]
        c[i][n + j] = [ZERO] * n + col
        s = -sign(int(A.parity(i)) * int(M.parity(j)))
        c[n + j][i] = [ZERO] * n + [s * x for x in col]
    g = LieSuperStructure(space, c)

    vals = [[ZERO] * N for _ in range(N)]
    for i in range(n):
        vals[n + i][i] = ONE
        if kind == "t-star":
            vals[i][n + i] = ONE * -sign(int(A.parity(i)))
        else:
            vals[i][n + i] = -ONE
    form = BilForm.from_values(space, fparity, vals)
    dual = SubSpace(space, [space.basis_vector(n + i) for i in range(n)])
    basepart = SubSpace(space, [space.basis_vector(i) for i in range(n)])
    return Extension(kind, h, nabla, cocycle, g, form, dual, basepart)


def t_star_extend(h, nabla, alpha=None, check=True) -> Extension:
    alpha = alpha or ModuleCocycle.zero(h.dim, "dual")
    return _extend(h, nabla, alpha, "t-star", check)


def pi_t_star_extend(h, nabla, beta=None, check=True) -> Extension:
    beta = beta or ModuleCocycle.zero(h.dim, "pi-dual")
    return _extend(h, nabla, beta, "pi-t-star", check)


def extension_report(ext: Extension) -> CheckReport:
    """Jacobi, closedness, non-degeneracy, parity and the Lagrangian dual ideal."""
    rep = CheckReport("extension")
    j = check_jacobi(ext.algebra)
    rep.merge(j)
    for w in closed_failures(ext.algebra, ext.form):
        rep.fail({"check": "closed", **w})
    if not is_antisymmetric(ext.form):
        rep.fail({"check": "anti-symmetric"})
    d = form_determinant(ext.form)
    rep.detail["det"] = str(d)
    if d.is_zero():
        rep.fail({"check": "non-degenerate"})
    else:
        if not is_ideal(ext.algebra, ext.dual_ideal):
            rep.fail({"check": "dual-ideal"})
        if orthogonal_complement(ext.dual_ideal, ext.form) != ext.dual_ideal:
            rep.fail({"check": "lagrangian"})
        if orthogonal_complement(ext.base_complement, ext.form) != ext.base_complement:
            rep.fail({"check": "complement-lagrangian"})
    expected = Parity.EVEN if ext.kind == "t-star" else Parity.ODD
    if ext.form.parity != expected:
        rep.fail({"check": "parity"})
    return rep


# ---------------------------------------------------------------------------
# converse construction
# ---------------------------------------------------------------------------

def _homogeneous_rows(S: SubSpace):
    V = S.ambient
    rows = []
    for r in S.rows:
        p = V.vector_parity(r)
        if p is None:
            raise NotStronglyPolarized("subspace basis rows must be homogeneous")
        rows.append((r, p))
    return rows


def quotient_flat_connection(g: LieSuperStructure, omega: BilForm, a: SubSpace, N: SubSpace,
                             labels=None, a_rows=None, n_rows=None, lift_order="vu"):
    """Quotient algebra g/a (modelled on N) and the connection solved from omega.

    With the default ``lift_order="vu"``:
        omega(nabla_u v, x) = -(-1)^{|u||v|} omega(v, [u, x])   for u, v in N, x in a,
    which inverts :func:`t_star_extend` / :func:`pi_t_star_extend`.
    ``lift_order="uv"`` pairs u with [v, x] instead; that yields the
    transposed connection nabla_v u, which is torsion-free only when
    nabla is symmetric.
    Explicit homogeneous bases may be passed as ``a_rows``/``n_rows``;
    otherwise the echelon rows are used.
    """
    if lift_order not in ("vu", "uv"):
        raise ValueError("lift_order is 'vu' or 'uv'")
    V = g.space
    if a.dim + N.dim != V.dim or linalg.rank(a.rows + N.rows) != V.dim:
        raise NotStronglyPolarized("ideal and complement are not complementary")
    if not is_ideal(g, a) or orthogonal_complement(a, omega) != a:
        raise NotStronglyPolarized("a is not a Lagrangian ideal")
    if orthogonal_complement(N, omega) != N:
        raise NotStronglyPolarized("complement is not Lagrangian")
    nb = [(list(r), V.vector_parity(r)) for r in n_rows] if n_rows is not None else _homogeneous_rows(N)
    ab = [(list(r), V.vector_parity(r)) for r in a_rows] if a_rows is not None else _homogeneous_rows(a)
    if any(p is None for _, p in nb + ab):
        raise NotStronglyPolarized("basis rows must be homogeneous")
    m = len(nb)
    hspace = SuperSpace(
        tuple(labels) if labels else tuple(f"h{i + 1}" for i in range(m)), tuple(p for _, p in nb)
    )
    # decomposition of g-vectors in the basis nb + ab
    full = [r for r, _ in nb] + [r for r, _ in ab]
    T = linalg.transpose(full)

    def n_part(vec):
        coords = linalg.solve(T, list(vec), zero=ZERO)
        return coords[:m]

    hc = [[n_part(g.bracket(nb[i][0], nb[j][0])) for j in range(m)] for i in range(m)]
    h = LieSuperStructure(hspace, hc)
    pairing = [[omega(nb[k][0], ab[l][0]) for k in range(m)] for l in range(m)]
    gamma = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for i, j in product(range(m), repeat=2):
        s = -sign(int(nb[i][1]) * int(nb[j][1]))
        u, v = (nb[j][0], nb[i][0]) if lift_order == "vu" else (nb[i][0], nb[j][0])
        rhs = [s * omega(u, g.bracket(v, ab[l][0])) for l in range(m)]
        sol = linalg.solve(pairing, rhs, zero=ZERO)
        if sol is None:
            raise NotStronglyPolarized("pairing between complement and ideal is singular")
        gamma[i][j] = sol
    return h, Connection(h, gamma)


# ---------------------------------------------------------------------------
# identification maps
# ---------------------------------------------------------------------------

def map_from_pairs(source: SuperSpace, target: SuperSpace, pairs) -> LinearMap:
    """Linear map f: source -> target with f(src_r) = tgt_r for the given pairs."""
    S = [list(s) for s, _ in pairs]
    T = [list(t) for _, t in pairs]
    if len(S) != source.dim or linalg.rank(S) != source.dim:
        raise NotBijective("identification pairs do not span the source")
    Sinv = linalg.inverse(linalg.transpose(S))
    M = linalg.matmul(linalg.transpose(T), Sinv)
    if linalg.rank(M) != target.dim:
        raise NotBijective("identification map is not invertible")
    return LinearMap(source, target, M, Parity.EVEN)


def verify_iso(f: LinearMap, g1: LieSuperStructure, g2: LieSuperStructure, forms=None) -> CheckReport:
    rep = CheckReport("isomorphism")
    if f.domain.dim != f.codomain.dim or linalg.rank(f.matrix) != f.domain.dim:
        raise NotBijective("map is not bijective")
    V = g1.space
    n = V.dim
    imgs = [f(V.basis_vector(i)) for i in range(n)]
    for i, j in product(range(n), repeat=2):
        lhs = f(g1.c[i][j])
        rhs = g2.bracket(imgs[i], imgs[j])
        if lhs != rhs:
            rep.fail({"pair": [V.labels[i], V.labels[j]],
                      "mapped": {k: str(v) for k, v in g2.space.sparse(lhs).items()},
                      "target": {k: str(v) for k, v in g2.space.sparse(rhs).items()}})
    if forms is not None:
        w1, w2 = forms
        factor = None
        for i, j in product(range(n), repeat=2):
            a = w1(V.basis_vector(i), V.basis_vector(j))
            b = w2(imgs[i], imgs[j])
            if not a and not b:
                continue
            if not a or not b:
                rep.fail({"form-pair": [V.labels[i], V.labels[j]], "source": str(a), "image": str(b)})
                continue
            q = b / a
            if factor is None:
                factor = q
            elif q != factor:
                rep.fail({"form-pair": [V.labels[i], V.labels[j]], "ratio": str(q), "expected": str(factor)})
        rep.detail["form_factor"] = str(factor) if factor is not None else None
    return rep
