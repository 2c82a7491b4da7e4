"""Derivations of finitely presented Q-algebras and their certificates.

A derivation of Q[x_1..x_n]/I is given by the images of the generators; it
extends to every polynomial by the Leibniz rule.  It is well defined on the
quotient exactly when it maps each relation into I.

Local nilpotency is certified on generators only.  That suffices: the set of
elements f with d^N(f) = 0 for some N is closed under sums, and under
products because d^(a+b-1)(fg) = sum binom(a+b-1, i) d^i(f) d^(a+b-1-i)(g)
vanishes when d^a(f) = d^b(g) = 0.  So it is a subalgebra, and it contains
the whole ring once it contains the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .poly import Ideal, Polynomial

DEFAULT_CAP = 64

CERTIFIED = "certified-yes"
INCONCLUSIVE = "inconclusive"
NO = "no"


@dataclass(eq=False)
class Ring:
    vars: tuple[str, ...]
    relations: Ideal

    @classmethod
    def of(cls, vars, relations=(), order: str = "grevlex") -> "Ring":
        vars = tuple(vars)
        return cls(vars, Ideal(vars, tuple(relations), order))

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.relations.generators:
            return f
        return self.relations.reduce(f)

    def var(self, name: str) -> Polynomial:
        return Polynomial.var(self.vars, name)


@dataclass(eq=False)
class Derivation:
    ring: Ring
    images: dict[str, Polynomial]
    name: str = "d"

    def __post_init__(self) -> None:
        missing = [v for v in self.ring.vars if v not in self.images]
        if missing:
            raise ValueError(f"derivation {self.name} has no image for {', '.join(missing)}")
        for v, p in self.images.items():
            if p.vars != self.ring.vars:
                raise ValueError(f"image of {v} is over {p.vars}, not {self.ring.vars}")

    @classmethod
    def of(cls, ring: Ring, images: Mapping[str, Polynomial | int], name: str = "d") -> "Derivation":
        conv = {}
        for v, p in images.items():
            conv[v] = p if isinstance(p, Polynomial) else Polynomial.constant(ring.vars, p)
        return cls(ring, conv, name)


def apply_raw(d: Derivation, f: Polynomial) -> Polynomial:
    """Leibniz extension without reduction."""
    out = Polynomial.zero(d.ring.vars)
    for v in d.ring.vars:
        img = d.images[v]
        if img:
            df = f.derivative(v)
            if df:
                out = out + df * img
    return out


def apply(d: Derivation, f: Polynomial) -> Polynomial:
    """d(f) in normal form modulo the relations."""
    return d.ring.reduce(apply_raw(d, f))


def ideal_witness(d: Derivation) -> tuple[Polynomial, Polynomial] | None:
    """First relation r with d(r) outside the ideal, with the normal form of d(r)."""
    for r in d.ring.relations.generators:
        nf = apply(d, r)
        if nf:
            return r, nf
    return None


def preserves_ideal(d: Derivation) -> bool:
    return ideal_witness(d) is None


def nilpotency_index(d: Derivation, f: Polynomial, cap: int = DEFAULT_CAP) -> int | None:
    """Least n <= cap with d^n(f) = 0 modulo the relations; None when the cap runs out."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    cur = d.ring.reduce(f)
    for n in range(cap + 1):
        if not cur:
            return n
        if n == cap:
            break
        cur = apply(d, cur)
    return None


@dataclass
class LndVerdict:
    name: str
    status: str
    indices: dict[str, int | None] = field(default_factory=dict)
    witness: tuple[Polynomial, Polynomial] | None = None

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def as_dict(self) -> dict:
        out = {"derivation": self.name, "status": self.status, "indices": dict(self.indices)}
        if self.witness is not None:
            r, img = self.witness
            out["witness"] = {"relation": str(r), "image_normal_form": str(img)}
        return out


def is_lnd(d: Derivation, cap: int = DEFAULT_CAP) -> LndVerdict:
    w = ideal_witness(d)
    if w is not None:
        return LndVerdict(d.name, NO, witness=w)
    indices = {v: nilpotency_index(d, d.ring.var(v), cap) for v in d.ring.vars}
    status = CERTIFIED if all(i is not None for i in indices.values()) else INCONCLUSIVE
    return LndVerdict(d.name, status, indices)


def fixed_point_ideal(d: Derivation) -> Ideal:
    """Relations plus all nonzero generator images: the fixed-point locus of the action."""
    extra = [p for v in d.ring.vars if (p := d.images[v])]
    return d.ring.relations.with_generators(extra)


def is_fixed_point_free(d: Derivation) -> bool:
    """True iff the images have no common zero on the variety (1 lies in the ideal)."""
    if not preserves_ideal(d):
        raise ValueError(f"{d.name} does not preserve the relation ideal")
    return fixed_point_ideal(d).contains_one()


def commutator(d1: Derivation, d2: Derivation, f: Polynomial) -> Polynomial:
    """[d1, d2](f) modulo the relations."""
    return d1.ring.reduce(apply_raw(d1, apply(d2, f)) - apply_raw(d2, apply(d1, f)))
