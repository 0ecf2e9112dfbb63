"""Exact coefficients: rationals and rational functions in the catalog parameters.

Every tensor in the package has entries in the field Q(p, q, lambda, gamma,
mu, nu, delta).  A :class:`Scalar` is a reduced fraction of two
:class:`MultiPoly` objects; rationals are plain :class:`fractions.Fraction`.

Canonical form of a Scalar: numerator and denominator are coprime and the
denominator is monic with respect to graded-lex order.  Two Scalars are equal
iff their canonical forms coincide.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

PARAMETERS = ("p", "q", "lambda", "gamma", "mu", "nu", "delta")
NPARAMS = len(PARAMETERS)
_PARAM_INDEX = {name: i for i, name in enumerate(PARAMETERS)}
_GREEK = {"λ": "lambda", "γ": "gamma", "μ": "mu", "ν": "nu", "δ": "delta"}


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class UnboundParameter(ScalarError):
    pass


class PoleAtSamplePoint(ScalarError):
    pass


class ScalarParseError(ScalarError, ValueError):
    pass


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero Fractions.
    The same class serves the parameter field (``nvars == NPARAMS``) and the
    ad hoc rings used for determinants and unknown products.
    """

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None, nvars: int = NPARAMS):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}
        self._hash = None

    @classmethod
    def const(cls, c, nvars: int = NPARAMS) -> "MultiPoly":
        c = Fraction(c)
        return cls({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = NPARAMS) -> "MultiPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): Fraction(1)}, nvars)

    # -- queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self):
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return _raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _raw({}, self.nvars)
            return _raw({e: c * other for e, c in self.terms.items()}, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return _raw(terms, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, values) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def substitute(self, values: Mapping[int, object]) -> "MultiPoly":
        """Replace variables by numbers or polynomials (same ring)."""
        result = _raw({}, self.nvars)
        for e, c in self.terms.items():
            rest = list(e)
            factor = c
            poly_factors = []
            for i, val in values.items():
                k = e[i]
                if not k:
                    continue
                rest[i] = 0
                if isinstance(val, MultiPoly):
                    poly_factors.append(val ** k)
                else:
                    factor *= Fraction(val) ** k
            term = _raw({tuple(rest): factor} if factor else {}, self.nvars)
            for pf in poly_factors:
                term = term * pf
            result = result + term
        return result

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        from math import gcd

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def format(self, names: Iterable[str] | None = None) -> str:
        names = list(names) if names is not None else _default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[i] if n == 1 else f"{names[i]}^{n}" for i, n in enumerate(e) if n
            )
            a = abs(c)
            if not mono:
                body = _fmt_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_rational(a)}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("-" if c < 0 else "+") + body)
        return "".join(out)

    def __repr__(self):
        return f"MultiPoly({self.format()})"


def _raw(terms, nvars) -> MultiPoly:
    p = MultiPoly.__new__(MultiPoly)
    p.terms = terms
    p.nvars = nvars
    p._hash = None
    return p


def _default_names(nvars):
    if nvars == NPARAMS:
        return list(PARAMETERS)
    return [f"x{i + 1}" for i in range(nvars)]


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# polynomial gcd
# ---------------------------------------------------------------------------

def _monomial_gcd(polys) -> tuple:
    exps = [e for p in polys for e in p.terms]
    return tuple(min(col) for col in zip(*exps))


def _divide_monomial(p: MultiPoly, m: tuple) -> MultiPoly:
    return _raw({tuple(a - b for a, b in zip(e, m)): c for e, c in p.terms.items()}, p.nvars)


@lru_cache(maxsize=None)
def _sympy_ring(nvars):
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(f"t{i}" for i in range(nvars)), QQ)
    return R, QQ


def _to_sympy(p: MultiPoly):
    R, QQ = _sympy_ring(p.nvars)
    return R.from_dict({e: QQ(c.numerator, c.denominator) for e, c in p.terms.items()})


def _from_sympy(sp, nvars) -> MultiPoly:
    return _raw(
        {tuple(e): Fraction(int(c.numerator), int(c.denominator)) for e, c in sp.items()},
        nvars,
    )


def _cancel(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    if len(num.terms) == 1 or len(den.terms) == 1:
        m = _monomial_gcd((num, den))
        if any(m):
            num, den = _divide_monomial(num, m), _divide_monomial(den, m)
        return num, den
    _, cn, cd = _to_sympy(num).cofactors(_to_sympy(den))
    return _from_sympy(cn, num.nvars), _from_sympy(cd, den.nvars)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

_ONE_POLY = MultiPoly.const(1)


class Scalar:
    """Element of Q(p, q, lambda, gamma, mu, nu, delta) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, value=0, den=None):
        if isinstance(value, Scalar) and den is None:
            self.num, self.den = value.num, value.den
            return
        if isinstance(value, str):
            s = parse_scalar(value)
            self.num, self.den = s.num, s.den
            return
        num = value if isinstance(value, MultiPoly) else MultiPoly.const(Fraction(value))
        if den is None:
            self.num, self.den = num, _ONE_POLY
            return
        d = den if isinstance(den, MultiPoly) else MultiPoly.const(Fraction(den))
        self.num, self.den = _normalize(num, d)

    @classmethod
    def param(cls, name: str) -> "Scalar":
        name = _GREEK.get(name, name)
        if name not in _PARAM_INDEX:
            raise UnboundParameter(f"unknown parameter {name!r}")
        return _scalar(MultiPoly.var(_PARAM_INDEX[name]), _ONE_POLY)

    # -- queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def parameters(self) -> set[str]:
        return {PARAMETERS[i] for i in self.num.variables() | self.den.variables()}

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        if self.den is _ONE_POLY and o.den is _ONE_POLY:
            return _scalar(self.num + o.num, _ONE_POLY)
        if self.den == o.den:
            return _scalar(*_normalize(self.num + o.num, self.den))
        return _scalar(*_normalize(self.num * o.den + o.num * self.den, self.den * o.den))

    __radd__ = __add__

    def __neg__(self):
        return _scalar(-self.num, self.den)

    def __sub__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        if not self.num.terms or not o.num.terms:
            return ZERO
        if self.den is _ONE_POLY and o.den is _ONE_POLY:
            return _scalar(self.num * o.num, _ONE_POLY)
        return _scalar(*_normalize(self.num * o.num, self.den * o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero(f"division of {self} by zero")
        return _scalar(*_normalize(self.num * o.den, self.den * o.num))

    def __rtruediv__(self, other):
        return _as_scalar(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer exponents are supported")
        if n < 0:
            return ONE / (self ** -n)
        return _scalar(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation ----------------------------------------------------------
    def subs(self, assignment: Mapping[str, object]) -> "Scalar":
        """Partial substitution of rational values for parameters."""
        values = {}
        for name, v in assignment.items():
            name = _GREEK.get(name, name)
            if name in _PARAM_INDEX:
                values[_PARAM_INDEX[name]] = Fraction(v) if not isinstance(v, Scalar) else v.constant_value()
        if not values:
            return self
        num = self.num.substitute(values)
        den = self.den.substitute(values)
        if den.is_zero():
            raise PoleAtSamplePoint(f"{self} has a pole at {dict(assignment)}")
        return _scalar(*_normalize(num, den))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"


def _scalar(num, den) -> Scalar:
    s = Scalar.__new__(Scalar)
    s.num = num
    s.den = den
    return s


def _normalize(num: MultiPoly, den: MultiPoly):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return num, _ONE_POLY
    if den.is_constant():
        c = den.constant_value()
        return (num * (1 / c) if c != 1 else num), _ONE_POLY
    num, den = _cancel(num, den)
    if den.is_constant():
        c = den.constant_value()
        return num * (1 / c), _ONE_POLY
    _, lc = den.leading()
    if lc != 1:
        num, den = num * (1 / lc), den * (1 / lc)
    return num, den


def _as_scalar(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return _scalar(MultiPoly.const(x), _ONE_POLY)
    return None


ZERO = _scalar(MultiPoly(), _ONE_POLY)
ONE = _scalar(MultiPoly.const(1), _ONE_POLY)


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings and Scalars to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar(x)


def scalar_arith(a, b, op: str) -> Scalar:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(s, assignment: Mapping[str, object]) -> Fraction:
    """Exact value of ``s`` at a full assignment of its parameters."""
    s = as_scalar(s)
    missing = s.parameters() - {_GREEK.get(k, k) for k in assignment}
    if missing:
        raise UnboundParameter(f"unassigned parameters: {sorted(missing)}")
    values = [Fraction(0)] * NPARAMS
    for name, v in assignment.items():
        name = _GREEK.get(name, name)
        if name in _PARAM_INDEX:
            values[_PARAM_INDEX[name]] = Fraction(v)
    den = s.den.evaluate(values)
    if den == 0:
        raise PoleAtSamplePoint(f"{s} has a pole at {dict(assignment)}")
    return s.num.evaluate(values) / den


def is_identically_zero(s) -> bool:
    return as_scalar(s).is_zero()


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

def format_scalar(s: Scalar) -> str:
    num = s.num.format()
    if s.den.is_constant():
        return num
    den = s.den.format()
    if len(s.num.terms) > 1:
        num = f"({num})"
    single = len(s.den.terms) == 1 and s.den.leading()[1] == 1 and sum(
        1 for k in s.den.leading()[0] if k
    ) == 1
    if not single:
        den = f"({den})"
    return f"{num}/{den}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-zλγμνδ_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        elif op.strip():
            if op not in "+-*/^()":
                raise ScalarParseError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ScalarParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ScalarParseError("empty scalar expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ScalarParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, n = self.take()
            if kind != "num":
                raise ScalarParseError(f"integer exponent expected in {self.text!r}")
            return base ** (sign * n)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Scalar(val)
        if kind == "name":
            try:
                return Scalar.param(val)
            except UnboundParameter as exc:
                raise ScalarParseError(str(exc)) from None
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ScalarParseError(f"unexpected token {val!r} in {self.text!r}")


@lru_cache(maxsize=4096)
def parse_scalar(text: str) -> Scalar:
    """Parse the catalog scalar grammar, e.g. ``"-(q+1)"`` or ``"(p^2-1)/p"``."""
    return _Parser(text).parse()
