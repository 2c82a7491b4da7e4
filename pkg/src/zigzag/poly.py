"""Exact multivariate polynomials over Q, normal forms and Groebner bases.

Polynomials are sparse maps from exponent tuples to ``Fraction`` coefficients
over a fixed, ordered variable list.  Ideals cache a reduced Groebner basis
per monomial order; membership is decided by reduction against it.

    >>> x, y = Polynomial.variables(("x", "y"))
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

ORDERS = ("grevlex", "lex")


class VariableMismatch(ValueError):
    """Operands live over different variable lists."""


def grevlex_key(exp: Exponent) -> tuple:
    # larger key = larger monomial; ties broken by the last variable, reversed
    return (sum(exp), tuple(-e for e in reversed(exp)))


def lex_key(exp: Exponent) -> tuple:
    return exp


def order_key(order: str) -> Callable[[Exponent], tuple]:
    if order == "grevlex":
        return grevlex_key
    if order == "lex":
        return lex_key
    raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(i <= j for i, j in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(i, j) for i, j in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i - j for i, j in zip(a, b))


def _add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i + j for i, j in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial with rational coefficients.

    Equality is structural: same variable list and same nonzero terms.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, Scalar] | None = None):
        self.vars: tuple[str, ...] = tuple(vars)
        clean: dict[Exponent, Fraction] = {}
        n = len(self.vars)
        for exp, c in (terms or {}).items():
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            if c:
                clean[tuple(exp)] = Fraction(c)
        self.terms: dict[Exponent, Fraction] = clean
        self._hash: int | None = None

    # construction -----------------------------------------------------

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Exponent, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls(vars)

    @classmethod
    def constant(cls, vars: Sequence[str], c: Scalar) -> "Polynomial":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "Polynomial":
        vars = tuple(vars)
        if name not in vars:
            raise VariableMismatch(f"unknown variable {name!r}; ring has {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exp: 1})

    @classmethod
    def variables(cls, vars: Sequence[str]) -> tuple["Polynomial", ...]:
        return tuple(cls.var(vars, v) for v in vars)

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Exponent, c: Scalar = 1) -> "Polynomial":
        return cls(vars, {tuple(exp): c})

    # basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading(self, order: str = "grevlex") -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    def sorted_terms(self, order: str = "grevlex") -> list[tuple[Exponent, Fraction]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monic(self, order: str = "grevlex") -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self.scale(1 / lc)

    # arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"variable lists differ: {self.vars} vs {other.vars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._raw(self.vars, {})
        return Polynomial._raw(self.vars, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, exp: Exponent, c: Fraction) -> "Polynomial":
        return Polynomial._raw(self.vars, {_add(e, exp): c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, name: str) -> "Polynomial":
        i = self.vars.index(name) if name in self.vars else -1
        if i < 0:
            raise VariableMismatch(f"unknown variable {name!r}; ring has {self.vars}")
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Polynomial._raw(self.vars, out)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v**k
            total += t
        return total

    def substitute(self, name: str, value: "Polynomial") -> "Polynomial":
        """Replace one variable by a polynomial over the same variables."""
        self._check(value)
        i = self.vars.index(name)
        out = Polynomial.zero(self.vars)
        powers: dict[int, Polynomial] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            rest = list(e)
            rest[i] = 0
            out = out + powers[k].mul_term(tuple(rest), c)
        return out

    # value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.vars}, {str(self)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, order: str = "grevlex") -> str:
        """Canonical text form, parseable by :func:`zigzag.dsl.parse_polynomial`."""
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# division and Groebner bases


def reduce(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: str = "grevlex",
    with_quotients: bool = False,
):
    """Fully reduce ``f`` by ``basis``.

    Divisors are tried in sequence order, so the result is deterministic
    for a given basis.  With ``with_quotients`` returns
    ``(remainder, quotients)`` where ``f = sum(q_i * b_i) + remainder``.
    """
    key = order_key(order)
    basis = [b for b in basis]
    for b in basis:
        f._check(b)
    leads = [b.leading(order) if b.terms else None for b in basis]
    quotients = [dict() for _ in basis] if with_quotients else None
    p = dict(f.terms)
    rem: dict[Exponent, Fraction] = {}
    # max-heap of candidate exponents; stale entries are skipped
    heap = [(_neg(key(e)), e) for e in p]
    heapq.heapify(heap)
    seen = set(p)
    while heap:
        _, e = heapq.heappop(heap)
        seen.discard(e)
        c = p.get(e)
        if not c:
            continue
        for i, lead in enumerate(leads):
            if lead is None or not _divides(lead[0], e):
                continue
            shift = _sub(e, lead[0])
            coef = c / lead[1]
            for be, bc in basis[i].terms.items():
                t = _add(be, shift)
                s = p.get(t, 0) - coef * bc
                if s:
                    p[t] = s
                    if t not in seen:
                        seen.add(t)
                        heapq.heappush(heap, (_neg(key(t)), t))
                else:
                    p.pop(t, None)
            if quotients is not None:
                q = quotients[i]
                s = q.get(shift, 0) + coef
                if s:
                    q[shift] = s
                else:
                    q.pop(shift, None)
            break
        else:
            rem[e] = c
            del p[e]
    remainder = Polynomial._raw(f.vars, rem)
    if with_quotients:
        return remainder, [Polynomial._raw(f.vars, q) for q in quotients]
    return remainder


def _neg(k):
    # heapq is a min-heap; negate nested integer tuples to get a max-heap
    if isinstance(k, tuple):
        return tuple(_neg(v) for v in k)
    return -k


def s_polynomial(f: Polynomial, g: Polynomial, order: str = "grevlex") -> Polynomial:
    (ef, cf), (eg, cg) = f.leading(order), g.leading(order)
    m = _lcm(ef, eg)
    return f.mul_term(_sub(m, ef), 1 / cf) - g.mul_term(_sub(m, eg), 1 / cg)


@dataclass
class _Element:
    poly: Polynomial
    cofactors: list[Polynomial] | None


def _buchberger(
    gens: Sequence[Polynomial], order: str, track: bool
) -> list[_Element]:
    key = order_key(order)
    if not gens:
        return []
    vars = gens[0].vars
    zero = Polynomial.zero(vars)
    one = Polynomial.constant(vars, 1)
    elems: list[_Element] = []
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = None
        if track:
            cof = [zero] * len(gens)
            cof[i] = one
        elems.append(_Element(g, cof))

    def pair_entry(i: int, j: int):
        m = _lcm(elems[i].poly.leading(order)[0], elems[j].poly.leading(order)[0])
        return (sum(m), key(m), i, j)

    queue = [pair_entry(i, j) for i in range(len(elems)) for j in range(i)]
    heapq.heapify(queue)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        a, b = elems[i], elems[j]
        (ea, ca), (eb, cb) = a.poly.leading(order), b.poly.leading(order)
        m = _lcm(ea, eb)
        sa, sb = _sub(m, ea), _sub(m, eb)
        s = a.poly.mul_term(sa, 1 / ca) - b.poly.mul_term(sb, 1 / cb)
        polys = [e.poly for e in elems]
        if track:
            r, qs = reduce(s, polys, order, with_quotients=True)
        else:
            r = reduce(s, polys, order)
        if r.is_zero():
            continue
        cof = None
        if track:
            cof = [
                x.mul_term(sa, 1 / ca) - y.mul_term(sb, 1 / cb)
                for x, y in zip(a.cofactors, b.cofactors)
            ]
            for q, e in zip(qs, elems):
                if q:
                    cof = [c - q * d for c, d in zip(cof, e.cofactors)]
        elems.append(_Element(r, cof))
        n = len(elems) - 1
        for k in range(n):
            heapq.heappush(queue, pair_entry(n, k))
    return _reduce_basis(elems, order)


def _reduce_basis(elems: list[_Element], order: str) -> list[_Element]:
    """Minimize, interreduce and normalize to monic; sort by leading monomial."""
    key = order_key(order)
    leads = [e.poly.leading(order)[0] for e in elems]
    keep = []
    for i, e in enumerate(elems):
        li = leads[i]
        redundant = False
        for j in range(len(elems)):
            if j == i:
                continue
            lj = leads[j]
            if _divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(e)
    out = []
    for i, e in enumerate(keep):
        others = [k.poly for j, k in enumerate(keep) if j != i]
        track = e.cofactors is not None
        if track:
            r, qs = reduce(e.poly, others, order, with_quotients=True)
            cof = list(e.cofactors)
            rest = [k for j, k in enumerate(keep) if j != i]
            for q, k in zip(qs, rest):
                if q:
                    cof = [c - q * d for c, d in zip(cof, k.cofactors)]
        else:
            r = reduce(e.poly, others, order)
            cof = None
        _, lc = r.leading(order)
        r = r.scale(1 / lc)
        if cof is not None:
            cof = [c.scale(1 / lc) for c in cof]
        out.append(_Element(r, cof))
    # interreduction against the not-yet-reduced list is still a Groebner basis
    # with the same leading monomials; a second pass makes it fully reduced
    if any(
        reduce(e.poly, [k.poly for k in out if k is not e], order) != e.poly
        for e in out
    ):
        return _reduce_basis(out, order)
    out.sort(key=lambda e: key(e.poly.leading(order)[0]))
    return out


def buchberger(gens: Sequence[Polynomial], order: str = "grevlex") -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Plain Buchberger: S-pairs are processed by increasing lcm degree with no
    pair-elimination criteria.
    """
    order_key(order)
    return [e.poly for e in _buchberger(list(gens), order, track=False)]


def is_groebner(basis: Sequence[Polynomial], order: str = "grevlex") -> bool:
    """Every S-polynomial of ``basis`` reduces to zero."""
    basis = [b for b in basis if b]
    for i in range(len(basis)):
        for j in range(i):
            if reduce(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


@dataclass(eq=False)
class Ideal:
    """Finitely generated ideal of Q[vars] with a lazily computed basis."""

    vars: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    order: str = "grevlex"
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.vars = tuple(self.vars)
        self.generators = tuple(self.generators)
        order_key(self.order)
        for g in self.generators:
            if g.vars != self.vars:
                raise VariableMismatch(f"generator over {g.vars}, ideal over {self.vars}")

    @classmethod
    def of(cls, gens: Iterable[Polynomial], vars: Sequence[str] | None = None, order: str = "grevlex") -> "Ideal":
        gens = tuple(gens)
        if vars is None:
            if not gens:
                raise ValueError("cannot infer variables of an empty ideal")
            vars = gens[0].vars
        return cls(tuple(vars), gens, order)

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.vars, self.generators + tuple(extra), self.order)

    @cached_property
    def groebner(self) -> tuple[Polynomial, ...]:
        return tuple(buchberger(self.generators, self.order))

    @cached_property
    def _tracked(self) -> list[_Element]:
        return _buchberger(list(self.generators), self.order, track=True)

    def reduce(self, f: Polynomial) -> Polynomial:
        return reduce(f, self.groebner, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def contains_one(self) -> bool:
        return self.contains(Polynomial.constant(self.vars, 1))

    def certificate(self, f: Polynomial) -> list[Polynomial] | None:
        """Cofactors ``h`` with ``f = sum(h_i * generators[i])``, or None if ``f`` is not a member."""
        elems = self._tracked
        r, qs = reduce(f, [e.poly for e in elems], self.order, with_quotients=True)
        if r:
            return None
        zero = Polynomial.zero(self.vars)
        cof = [zero] * len(self.generators)
        for q, e in zip(qs, elems):
            if q:
                cof = [c + q * d for c, d in zip(cof, e.cofactors)]
        return cof


def ideal_member(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains(f)


def contains_one(ideal: Ideal) -> bool:
    return ideal.contains_one()


# ---------------------------------------------------------------------------
# univariate helpers


def _univariate_index(p: Polynomial, name: str) -> int:
    i = p.vars.index(name)
    for e in p.terms:
        if any(k for j, k in enumerate(e) if j != i):
            raise ValueError(f"{p} is not univariate in {name}")
    return i


def _coeffs(p: Polynomial, i: int) -> list[Fraction]:
    deg = max((e[i] for e in p.terms), default=-1)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def univariate_gcd(p: Polynomial, q: Polynomial, name: str) -> Polynomial:
    """Monic gcd of two polynomials in the single variable ``name`` (Euclid)."""
    p._check(q)
    i = _univariate_index(p, name)
    _univariate_index(q, name)
    a, b = _coeffs(p, i), _coeffs(q, i)

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = strip(a), strip(b)
    while b:
        # a mod b
        a = list(a)
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for k, c in enumerate(b):
                a[k + shift] -= f * c
            strip(a)
        a, b = b, a
    if not a:
        return Polynomial.zero(p.vars)
    lc = a[-1]
    terms = {}
    for k, c in enumerate(a):
        if c:
            e = [0] * len(p.vars)
            e[i] = k
            terms[tuple(e)] = c / lc
    return Polynomial(p.vars, terms)


def from_roots(vars: Sequence[str], name: str, roots: Iterable[Scalar]) -> Polynomial:
    """The monic polynomial prod(name - r)."""
    t = Polynomial.var(vars, name)
    out = Polynomial.constant(vars, 1)
    for r in roots:
        out = out * (t - Fraction(r))
    return out


def iter_terms(p: Polynomial, order: str = "grevlex") -> Iterator[tuple[Exponent, Fraction]]:
    yield from p.sorted_terms(order)
