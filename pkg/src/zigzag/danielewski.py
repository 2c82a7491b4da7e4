"""Hypersurfaces xy = p(z), their two translation-type derivations, and their zigzags."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boundary import BlowupProgram, F1, InvalidParameter
from .lnd import Derivation, Ring, is_fixed_point_free, is_lnd
from .poly import Polynomial, from_roots as _poly_from_roots, univariate_gcd

VARS = ("x", "y", "z")


@dataclass(eq=False)
class DanielewskiSurface:
    p: Polynomial
    ring: Ring
    d_x: Derivation
    d_y: Derivation
    q: int
    smooth: bool
    roots: tuple[Fraction, ...] | None = None

    @property
    def relation(self) -> Polynomial:
        return self.ring.relations.generators[0]


def _embed(p: Polynomial) -> Polynomial:
    if p.vars == VARS:
        if p.degree_in("x") > 0 or p.degree_in("y") > 0:
            raise InvalidParameter(f"p must depend on z only, got {p}")
        return p
    if p.vars == ("z",):
        return Polynomial(VARS, {(0, 0, e[0]): c for e, c in p.terms.items()})
    raise InvalidParameter(f"p must be a polynomial in z, got variables {p.vars}")


def build(p: Polynomial, roots: Sequence[Fraction] | None = None) -> DanielewskiSurface:
    """Surface xy = p(z) with d_x: (x, y, z) -> (0, p'(z), x) and d_y: (x, y, z) -> (p'(z), 0, y)."""
    p = _embed(p)
    q = p.degree_in("z")
    if q < 1:
        raise InvalidParameter("p must have degree at least 1")
    x, y, z = Polynomial.variables(VARS)
    dp = p.derivative("z")
    ring = Ring.of(VARS, [x * y - p])
    d_x = Derivation.of(ring, {"x": 0, "y": dp, "z": x}, name="d_x")
    d_y = Derivation.of(ring, {"x": dp, "y": 0, "z": y}, name="d_y")
    smooth = univariate_gcd(p, dp, "z").is_constant()
    return DanielewskiSurface(p, ring, d_x, d_y, q, smooth, tuple(Fraction(r) for r in roots) if roots is not None else None)


def from_roots(roots: Sequence[Fraction | int]) -> DanielewskiSurface:
    return build(_poly_from_roots(VARS, "z", roots), roots)


def s_q(q: int) -> DanielewskiSurface:
    """xy = (z - 1)(z - 2)...(z - q)."""
    return from_roots(range(1, q + 1))


def certificates(s: DanielewskiSurface, cap: int = 64) -> dict:
    out = {}
    for d in (s.d_x, s.d_y):
        verdict = is_lnd(d, cap)
        out[d.name] = {
            **verdict.as_dict(),
            "fixed_point_free": is_fixed_point_free(d) if verdict.status != "no" else False,
        }
    return out


def zigzag_of(s: DanielewskiSurface, base_n: int = 0) -> BlowupProgram:
    """The k = 0 program: q leaves on the proto-fiber, one per fiber component over x = 0."""
    if not s.smooth:
        raise InvalidParameter("zigzags are defined for smooth surfaces (simple roots) only")
    return BlowupProgram(base_n, None, (), (F1,) * s.q)


@dataclass(frozen=True)
class EmbeddingWitness:
    rho: Polynomial
    v: Polynomial
    u: Polynomial
    identity_certified: bool  # rho * v - p(u) is zero in the coordinate ring
    component_values: tuple[Fraction, ...]  # value of u on each component of {rho = 0}
    values_distinct: bool
    v_linear_on_components: bool


def embedding_witness(s: DanielewskiSurface) -> EmbeddingWitness:
    if not s.smooth:
        raise InvalidParameter("embedding witness needs a smooth surface")
    if s.roots is None:
        raise InvalidParameter("roots of p are needed to label the fiber components")
    x, y, z = Polynomial.variables(VARS)
    identity = s.ring.reduce(x * y - s.p.substitute("z", z)).is_zero()
    linear = True
    for r in s.roots:
        # component {x = 0, z = r}, parametrized by y
        rel = s.relation.substitute("x", Polynomial.constant(VARS, 0)).substitute(
            "z", Polynomial.constant(VARS, r)
        )
        v_on = y.substitute("x", Polynomial.constant(VARS, 0)).substitute("z", Polynomial.constant(VARS, r))
        linear &= rel.is_zero() and v_on.degree_in("y") == 1 and v_on.total_degree() == 1
    vals = tuple(s.roots)
    return EmbeddingWitness(x, y, z, identity, vals, len(set(vals)) == len(vals), bool(linear))
