"""Scripted certificates that an algebra has no 2-dimensional Lagrangian ideal.

A certificate is a case tree over the coordinates of an arbitrary nonzero
member X = x1 e1 + ... + xn en of a hypothetical Lagrangian ideal a.

Nodes:

``{"split": "x1", "nonzero": node, "zero": node}``
    Case split on one coordinate.  When every hypothesis on the path so far
    holds for all members of a, closing the nonzero branch proves that every
    member has that coordinate zero, so the zero branch continues with the
    global constraint a ⊆ {x1 = 0}.
``{"nonzero": "x2", "then": node}``
    Every other coordinate is already zero, so X != 0 forces x2 != 0.
``{"derive": [[source, target], ...], "then": node}``
    ``source`` is ``"X"`` or a basis label ``"ei"`` standing for [ei, X].
    The step checks source = f * target modulo the span of known members,
    with f a nonzero multiple of a coordinate assumed nonzero.  Then
    ``target`` is a member of a.
``{"end": kind, ...}``
    ``dimension``: the known members, or the global bound, violate dim a = 2.
    ``anisotropic`` (``vector``): a known member v has omega(v, v) != 0.
    ``definite`` (``complement``): a ⊆ W ⊆ span(K) + C with K the known
    members, dim K < 2 and omega definite on C, so a meets C in a nonzero
    non-isotropic vector.
    ``containment``: the global bound W has dimension 2, so a = W, and
    omega does not vanish on W.
"""
from __future__ import annotations

import re

from .lie import LieSuperStructure
from .linalg import rank, rref
from .obstruction import UnknownCertificate
from .scalar import ONE, ZERO, PARAMETERS, Scalar, as_scalar, parse_scalar
from .superspace import BilForm, eval_form


class CertificateFailure(Exception):
    pass


# -- linear expressions in the coordinates x1..xn ------------------------------
# A coordinate vector entry is a dict {var index: Scalar}.


def _lin_add(a, b, scale=ONE):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, ZERO) + v * scale
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _lin_scale(a, c):
    return {k: v * c for k, v in a.items() if v * c} if c else {}


def _lin_zero(a, zero_vars):
    return {k: v for k, v in a.items() if k not in zero_vars}


def _fmt_lin(a):
    if not a:
        return "0"
    return " + ".join(f"({v})*x{k + 1}" for k, v in sorted(a.items()))


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_expansion(text: str, V, assignment=None) -> list:
    """Parse ``"x2*e2 + 1/2*x3*e3 - p*x1*e4"`` into a vector of linear expressions."""
    vec = [dict() for _ in range(V.dim)]
    text = text.replace(" ", "")
    if text in ("", "0"):
        return vec
    for sgn, body in _TERM.findall(text):
        factors = body.split("*")
        xs = [f for f in factors if re.fullmatch(r"x\d+", f)]
        es = [f for f in factors if f in V.labels]
        rest = [f for f in factors if f not in xs and f not in es]
        if len(xs) != 1 or len(es) != 1:
            raise ValueError(f"term {body!r} needs exactly one coordinate and one basis vector")
        coeff = parse_scalar("*".join(rest)).subs(assignment or {}) if rest else ONE
        if sgn == "-":
            coeff = -coeff
        k = V.index(es[0])
        vec[k] = _lin_add(vec[k], {int(xs[0][1:]) - 1: coeff})
    return vec


def _parse_vector(text: str, V, assignment=None) -> list:
    vec = [ZERO] * V.dim
    text = text.replace(" ", "")
    for sgn, body in _TERM.findall(text):
        factors = body.split("*")
        es = [f for f in factors if f in V.labels]
        rest = [f for f in factors if f not in es]
        if len(es) != 1:
            raise ValueError(f"term {body!r} needs exactly one basis vector")
        c = parse_scalar("*".join(rest)).subs(assignment or {}) if rest else ONE
        vec[V.index(es[0])] += -c if sgn == "-" else c
    return vec


def bracket_with_generic(L: LieSuperStructure, i: int) -> list:
    """[e_i, X] for X = sum x_k e_k, as a vector of linear expressions."""
    n = L.space.dim
    out = [dict() for _ in range(n)]
    for k in range(n):
        for m in range(n):
            c = L.c[i][k][m]
            if c:
                out[m] = _lin_add(out[m], {k: c})
    return out


def _generic(n):
    return [{k: ONE} for k in range(n)]


# -- nonzero decisions -----------------------------------------------------------


def _is_nonzero(s, nonzero_params) -> bool:
    """s != 0 on the whole region: a nonzero constant or a monomial in parameters
    declared nonzero."""
    s = as_scalar(s)
    if not s:
        return False
    if not s.parameters():
        return True
    terms = s.num.terms
    if len(terms) != 1:
        return False
    (exp,) = terms
    used = {PARAMETERS[i] for i, k in enumerate(exp) if k}
    return used <= set(nonzero_params)


def _definite(G) -> bool:
    """All leading principal minors of G (or of -G) positive, over constants."""
    from .linalg import det

    n = len(G)
    for sgn in (1, -1):
        ok = True
        for r in range(1, n + 1):
            sub = [[G[i][j] * sgn for j in range(r)] for i in range(r)]
            d = det(sub)
            if d.parameters():
                raise CertificateFailure("definiteness test needs parameter-free Gram entries")
            if not d.constant_value() > 0:
                ok = False
                break
        if ok:
            return True
    return False


# -- the engine --------------------------------------------------------------------


class _State:
    def __init__(self, n):
        self.zero: set[int] = set()      # coordinates assumed zero for X
        self.nonzero: set[int] = set()   # coordinates assumed nonzero for X
        self.global_zero: set[int] = set()  # coordinates zero for all of a
        self.members: list = []          # concrete vectors known to lie in a
        self.is_global = True            # every hypothesis so far holds for all members
        self.n = n

    def copy(self):
        s = _State(self.n)
        s.zero, s.nonzero, s.global_zero = set(self.zero), set(self.nonzero), set(self.global_zero)
        s.members = list(self.members)
        s.is_global = self.is_global
        return s


class _Replay:
    def __init__(self, L, omega, nonzero_params, dim_a, assignment):
        self.assignment = assignment
        self.L = L
        self.V = L.space
        self.omega = omega
        self.nonzero_params = tuple(nonzero_params)
        self.dim_a = dim_a
        self.steps: list = []

    def log(self, path, what, ok=True, **detail):
        rec = {"path": "/".join(path) or "root", "step": what, "ok": ok, **detail}
        self.steps.append(rec)
        if not ok:
            raise CertificateFailure(f"{rec['path']}: {what} failed: {detail}")

    def _var(self, name):
        if not re.fullmatch(r"x\d+", name) or not 1 <= int(name[1:]) <= self.V.dim:
            raise CertificateFailure(f"bad coordinate name {name!r}")
        return int(name[1:]) - 1

    def _reduce(self, vec, members):
        """Remove from a linear-expression vector its components along known members."""
        rows, pivots = rref([list(m) for m in members]) if members else ([], [])
        out = [dict(c) for c in vec]
        for row, col in zip(rows, pivots):
            coeff = out[col]
            if not coeff:
                continue
            for k in range(len(out)):
                if row[k]:
                    out[k] = _lin_add(out[k], coeff, -row[k])
        return out

    def run(self, node, st: _State, path):
        if "split" in node:
            v = self._var(node["split"])
            nz = st.copy()
            nz.nonzero.add(v)
            nz.is_global = False
            self.run(node["nonzero"], nz, path + [f"{node['split']}!=0"])
            z = st.copy()
            z.zero.add(v)
            if st.is_global:
                z.global_zero.add(v)
            self.log(path, f"split on {node['split']}", global_zero=st.is_global)
            self.run(node["zero"], z, path + [f"{node['split']}=0"])
            return
        if "nonzero" in node:
            v = self._var(node["nonzero"])
            others = set(range(self.V.dim)) - {v}
            ok = others <= st.zero
            self.log(path, f"X != 0 forces {node['nonzero']} != 0", ok=ok)
            st = st.copy()
            st.nonzero.add(v)
            st.is_global = False
            self.run(node["then"], st, path)
            return
        if "derive" in node:
            st = st.copy()
            for source, target in node["derive"]:
                self._derive(source, target, st, path)
            self.run(node["then"], st, path)
            return
        if "end" in node:
            getattr(self, "_end_" + node["end"])(node, st, path)
            return
        raise CertificateFailure(f"unknown certificate node {node}")

    def _derive(self, source, target, st, path):
        n = self.V.dim
        if source == "X":
            vec = _generic(n)
        else:
            vec = bracket_with_generic(self.L, self.V.index(source))
        vec = [_lin_zero(c, st.zero) for c in vec]
        t = _parse_vector(target, self.V, self.assignment)
        red_v = self._reduce(vec, st.members)
        red_t = self._reduce([{0: c} if c else {} for c in t], st.members)
        red_t = [c.get(0, ZERO) for c in red_t]
        piv = next((k for k, c in enumerate(red_t) if c), None)
        if piv is None:
            self.log(path, f"{source} -> {target}", ok=False, reason="target already in the span of known members")
        f = _lin_scale(red_v[piv], 1 / red_t[piv])
        matches = all(_lin_add(red_v[k], f, -red_t[k]) == {} for k in range(n))
        factor_ok = (
            len(f) == 1
            and next(iter(f)) in st.nonzero
            and _is_nonzero(next(iter(f.values())), self.nonzero_params)
        )
        src = "X" if source == "X" else f"[{source}, X]"
        self.log(
            path,
            f"{src} gives {target} in a",
            ok=matches and factor_ok,
            factor=_fmt_lin(f),
            reduced=[_fmt_lin(c) for c in red_v],
        )
        st.members.append(t)

    def _member_rank(self, st):
        return rank([list(m) for m in st.members]) if st.members else 0

    def _bound_dim(self, st):
        return self.V.dim - len(st.global_zero)

    def _end_dimension(self, node, st, path):
        r = self._member_rank(st)
        b = self._bound_dim(st)
        self.log(path, "dimension contradiction", ok=r > self.dim_a or b < self.dim_a, members_rank=r, bound_dim=b)

    def _end_anisotropic(self, node, st, path):
        v = _parse_vector(node["vector"], self.V, self.assignment)
        in_a = rank([list(m) for m in st.members] + [v]) == self._member_rank(st)
        val = eval_form(self.omega, v, v)
        self.log(path, f"omega({node['vector']}, {node['vector']}) != 0", ok=in_a and _is_nonzero(val, self.nonzero_params), value=str(val))

    def _end_definite(self, node, st, path):
        V = self.V
        C = [V.basis_vector(V.index(lbl)) for lbl in node["complement"]]
        K = [list(m) for m in st.members]
        W = [V.basis_vector(k) for k in range(V.dim) if k not in st.global_zero]
        in_bound = all(all(m[k] == 0 for k in st.global_zero) for m in K)
        rk = rank(K) if K else 0
        direct = rank(K + C) == rk + len(C) if K else rank(C) == len(C)
        covers = rank(K + C + W) == rank(K + C)
        G = [[eval_form(self.omega, a, b) for b in C] for a in C]
        sym = all(G[i][j] == G[j][i] for i in range(len(C)) for j in range(len(C)))
        definite = sym and _definite(G)
        qf = " + ".join(
            f"({G[i][j] * (1 if i == j else 2)})*z{node['complement'][i][1:]}*z{node['complement'][j][1:]}"
            for i in range(len(C)) for j in range(i, len(C)) if G[i][j]
        )
        self.log(
            path,
            f"omega definite on span{{{', '.join(node['complement'])}}}",
            ok=in_bound and rk < self.dim_a and direct and covers and definite,
            quadratic_form=qf,
        )

    def _end_containment(self, node, st, path):
        V = self.V
        W = [k for k in range(V.dim) if k not in st.global_zero]
        nonzero_entry = [
            (V.labels[a], V.labels[b])
            for a in W for b in W
            if _is_nonzero(eval_form(self.omega, V.basis_vector(a), V.basis_vector(b)), self.nonzero_params)
        ]
        self.log(
            path,
            "a equals its bound, which is not isotropic",
            ok=len(W) == self.dim_a and bool(nonzero_entry),
            bound=[V.labels[k] for k in W],
            witness=nonzero_entry[:1],
        )


def _check_expansions(L, blocks, assignment):
    out = []
    V = L.space
    for block in blocks:
        zero = {int(x[1:]) - 1 for x in block.get("zero", [])}
        for lbl, text in block["brackets"].items():
            got = [_lin_zero(c, zero) for c in bracket_with_generic(L, V.index(lbl))]
            want = [_lin_zero(c, zero) for c in parse_expansion(text, V, assignment)]
            out.append({
                "bracket": f"[{lbl}, X]",
                "assuming_zero": sorted(block.get("zero", [])),
                "displayed": text,
                "ok": got == want,
            })
    return out


# -- the shipped certificates -------------------------------------------------------

_DEF = {"end": "definite", "complement": ["e3", "e4"]}

CERTIFICATES = {
    "D7_1/2,1/2^1": {
        "expansions": [
            {"brackets": {
                "e1": "x2*e2 + 1/2*x3*e3 + 1/2*x4*e4",
                "e2": "-x1*e2",
                "e3": "-1/2*x1*e3 + x3*e2",
                "e4": "-1/2*x1*e4 + x4*e2",
            }},
            {"zero": ["x1"], "brackets": {
                "e1": "x2*e2 + 1/2*x3*e3 + 1/2*x4*e4",
                "e2": "0",
                "e3": "x3*e2",
                "e4": "x4*e2",
            }},
        ],
        "tree": {"split": "x1",
                 "nonzero": {"derive": [["e2", "e2"], ["e3", "e3"], ["e4", "e4"]], "then": {"end": "dimension"}},
                 "zero": {"split": "x3",
                          "nonzero": {"split": "x4",
                                      "zero": {"derive": [["e3", "e2"], ["e1", "e3"]],
                                               "then": {"end": "anisotropic", "vector": "e3"}},
                                      "nonzero": {"derive": [["e3", "e2"]], "then": _DEF}},
                          "zero": {"split": "x4",
                                   "nonzero": {"derive": [["e4", "e2"], ["e1", "e4"]],
                                               "then": {"end": "anisotropic", "vector": "e4"}},
                                   "zero": {"nonzero": "x2",
                                            "then": {"derive": [["X", "e2"]], "then": _DEF}}}}},
    },
    "D9_1/2,p": {
        "expansions": [
            {"brackets": {
                "e1": "x2*e2 + 1/2*x3*e3 - p*x3*e4 + p*x4*e3 + 1/2*x4*e4",
                "e2": "-x1*e2",
                "e3": "-1/2*x1*e3 + p*x1*e4 + x3*e2",
                "e4": "-1/2*x1*e4 - p*x1*e3 + x4*e2",
            }},
            {"zero": ["x1"], "brackets": {
                "e1": "x2*e2 + 1/2*x3*e3 - p*x3*e4 + p*x4*e3 + 1/2*x4*e4",
                "e2": "0",
                "e3": "x3*e2",
                "e4": "x4*e2",
            }},
        ],
        "tree": {"split": "x1",
                 "nonzero": {"derive": [["e2", "e2"], ["e3", "-1/2*e3 + p*e4"], ["e4", "-p*e3 - 1/2*e4"]],
                             "then": {"end": "dimension"}},
                 "zero": {"split": "x3",
                          "nonzero": {"derive": [["e3", "e2"]], "then": _DEF},
                          "zero": {"split": "x4",
                                   "nonzero": {"derive": [["e4", "e2"]], "then": _DEF},
                                   "zero": {"nonzero": "x2",
                                            "then": {"derive": [["X", "e2"]], "then": _DEF}}}}},
    },
    "C1_1/2+A": {
        "expansions": [
            {"brackets": {
                "e1": "x2*e2 + 1/2*x3*e3",
                "e2": "-x1*e2",
                "e3": "-1/2*x1*e3 + x3*e2",
                "e4": "0",
            }},
        ],
        "tree": {"split": "x1",
                 "nonzero": {"derive": [["e2", "e2"], ["e3", "e3"]],
                             "then": {"end": "anisotropic", "vector": "e3"}},
                 "zero": {"split": "x3",
                          "nonzero": {"derive": [["e3", "e2"], ["e1", "e3"]],
                                      "then": {"end": "anisotropic", "vector": "e3"}},
                          "zero": {"split": "x2",
                                   "nonzero": {"derive": [["e1", "e2"]], "then": {"end": "containment"}},
                                   "zero": {"nonzero": "x4",
                                            "then": {"derive": [["X", "e4"]],
                                                     "then": {"end": "anisotropic", "vector": "e4"}}}}}},
    },
}


def replay_no_lagrangian_proof(entry_id: str, algebra: LieSuperStructure, form: BilForm,
                               nonzero_params=(), dim_a: int = 2, assignment=None) -> dict:
    """Run the certificate for ``entry_id`` against a concrete algebra and form.

    Parametric entries are replayed at a sample point: ``algebra`` and
    ``form`` are already specialized and ``assignment`` specializes the
    certificate text the same way.  Parameters listed in ``nonzero_params``
    may stay symbolic; they are known to be nonzero on the region.
    Returns a report dict with ``ok`` and one record per checked step.
    """
    if entry_id not in CERTIFICATES:
        raise UnknownCertificate(entry_id)
    cert = CERTIFICATES[entry_id]
    expansions = _check_expansions(algebra, cert["expansions"], assignment)
    replay = _Replay(algebra, form, nonzero_params, dim_a, assignment or {})
    error = None
    try:
        replay.run(cert["tree"], _State(algebra.space.dim), [])
    except CertificateFailure as exc:
        error = str(exc)
    ok = error is None and all(e["ok"] for e in expansions)
    return {"entry": entry_id, "ok": ok, "expansions": expansions, "steps": replay.steps, "error": error}
