"""Sparse exact-rational multivariate polynomials.

A polynomial carries a fixed tuple of variable names and a dict mapping
exponent tuples to nonzero Fraction coefficients.  All arithmetic is exact;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class MultiPoly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, Fraction | int]):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        nv = len(self.vars)
        for exp, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exp = tuple(exp)
            if len(exp) != nv or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for variables {self.vars}")
            clean[exp] = clean.get(exp, Fraction(0)) + coeff
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Iterable[str], value) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): Fraction(1)})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def coefficient(self, name: str, power: int) -> "MultiPoly":
        """Coefficient of name**power, as a polynomial in the same variables."""
        i = self.vars.index(name)
        out = {}
        for exp, coeff in self.terms.items():
            if exp[i] == power:
                reduced = exp[:i] + (0,) + exp[i + 1:]
                out[reduced] = coeff
        return MultiPoly(self.vars, out)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + coeff
        return MultiPoly(self.vars, out)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        point = [Fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, exp):
                term *= x ** e
            total += term
        return total

    def substitute(self, name: str, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute a polynomial (in the same variables) for one variable."""
        self._check(replacement)
        i = self.vars.index(name)
        out = MultiPoly.zero(self.vars)
        powers = {0: MultiPoly.constant(self.vars, 1)}
        for exp, coeff in self.terms.items():
            k = exp[i]
            if k not in powers:
                powers[k] = replacement ** k
            rest = MultiPoly(self.vars, {exp[:i] + (0,) + exp[i + 1:]: coeff})
            out = out + rest * powers[k]
        return out

    def rename_vars(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-embed into another variable tuple (a superset, any order)."""
        variables = tuple(variables)
        mapping = []
        for v in self.vars:
            if v not in variables:
                if self.degree_in(v) > 0:
                    raise ValueError(f"variable {v} used but absent from target")
                mapping.append(None)
            else:
                mapping.append(variables.index(v))
        out = {}
        for exp, coeff in self.terms.items():
            new = [0] * len(variables)
            for pos, e in zip(mapping, exp):
                if pos is not None:
                    new[pos] = e
            out[tuple(new)] = coeff
        return MultiPoly(variables, out)

    # -- formatting ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            factors = [f"{v}^{e}" if e > 1 else v
                       for v, e in zip(self.vars, exp) if e]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_]\w*|\^|\*|\+|-|\(|\))")


def parse_poly(text: str, variables: Iterable[str]) -> MultiPoly:
    """Parse expressions like "3*x0^2*x1 - 1/2*x2^3" over the given variables.

    Supports + - * ^ and parentheses, with rational coefficients.
    """
    variables = tuple(variables)
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)  # sentinel
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_sum():
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        node = parse_product() * sign
        while peek() in ("+", "-"):
            op = take()
            node = node + parse_product() * (1 if op == "+" else -1)
        return node

    def parse_product():
        node = parse_power()
        while True:
            tok = peek()
            if tok == "*":
                take()
                node = node * parse_power()
            elif tok is not None and (tok[0].isalnum() or tok in ("(",)):
                # implicit multiplication like "2x0" or "x0(x1+1)"
                node = node * parse_power()
            else:
                return node

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take()
            exp = take()
            if exp is None or not exp.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(exp)
        return base

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if tok == "-":
            return -parse_atom()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok[0].isdigit():
            return MultiPoly.constant(variables, Fraction(tok))
        if tok in variables:
            return MultiPoly.variable(variables, tok)
        raise ValueError(f"unknown variable {tok!r}")

    result = parse_sum()
    if peek() is not None:
        raise ValueError(f"trailing tokens at {tokens[idx:]!r}")
    return result


def determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant of a square matrix of polynomials.

    Laplace expansion memoized on column subsets; no divisions, so it is
    exact for any commutative entries.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].vars
    cache: dict[tuple[int, ...], MultiPoly] = {}

    def minor(cols: tuple[int, ...]) -> MultiPoly:
        row = n - len(cols)
        if not cols:
            return MultiPoly.constant(variables, 1)
        if cols in cache:
            return cache[cols]
        total = MultiPoly.zero(variables)
        for j, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(cols[:j] + cols[j + 1:])
            term = entry * sub
            total = total + (term if j % 2 == 0 else -term)
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


def resultant(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    """Sylvester resultant of f and g with respect to one variable."""
    m = f.degree_in(name)
    n = g.degree_in(name)
    if m < 1 and n < 1:
        raise ValueError(f"variable {name} absent from both polynomials")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if m < 1 or n < 1:
        # Res(f, g) = f_lead^deg(g) when one argument is constant in name
        const, other, deg = (f, g, n) if m < 1 else (g, f, m)
        return const ** deg
    fc = [f.coefficient(name, m - i) for i in range(m + 1)]
    gc = [g.coefficient(name, n - i) for i in range(n + 1)]
    size = m + n
    zero = MultiPoly.zero(f.vars)
    rows = []
    for shift in range(n):
        rows.append([zero] * shift + fc + [zero] * (n - 1 - shift))
    for shift in range(m):
        rows.append([zero] * shift + gc + [zero] * (m - 1 - shift))
    assert all(len(r) == size for r in rows)
    return determinant(rows)


# -- univariate helpers (used by the tangency square test) -------------------

UniPoly = list[Fraction]  # coefficients, low degree first; [] is zero


def _uni_trim(p: UniPoly) -> UniPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def uni_from_binary_form(poly: MultiPoly, x: str, y: str) -> tuple[UniPoly, int]:
    """Dehomogenize a binary form: returns (p(t) with t = x/y, degree in x+y).

    The multiplicity of x as a factor is total_degree - deg(p); the
    multiplicity of y is the valuation of p at 0.
    """
    d = poly.total_degree()
    xi, yi = poly.vars.index(x), poly.vars.index(y)
    coeffs = [Fraction(0)] * (d + 1)
    for exp, coeff in poly.terms.items():
        if sum(exp) != d or exp[xi] + exp[yi] != d:
            raise ValueError("not a binary form in the given variables")
        coeffs[exp[xi]] += coeff
    return _uni_trim(coeffs), d


def uni_derivative(p: UniPoly) -> UniPoly:
    return _uni_trim([i * c for i, c in enumerate(p)][1:])


def uni_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[k] = factor
        for i, c in enumerate(b):
            a[k + i] -= factor * c
        _uni_trim(a)
    return _uni_trim(q), a


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    a, b = list(a), list(b)
    while b:
        a, b = b, uni_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _uni_sub(a: UniPoly, b: UniPoly) -> UniPoly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _uni_trim(out)


def squarefree_multiplicities(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition: nontrivial squarefree factors with multiplicities."""
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return []
    dp = uni_derivative(p)
    a = uni_gcd(p, dp)
    b = uni_divmod(p, a)[0]
    c = uni_divmod(dp, a)[0]
    d = _uni_sub(c, uni_derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        f = uni_gcd(b, d)
        if len(f) > 1:
            out.append((f, i))
        b = uni_divmod(b, f)[0]
        c = uni_divmod(d, f)[0]
        d = _uni_sub(c, uni_derivative(b))
        i += 1
    return out
