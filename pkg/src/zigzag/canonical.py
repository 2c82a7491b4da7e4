"""Bookkeeping of the canonical divisor along a blow-up program.

The incremental coefficients carried on the graph's components are read
into a :class:`CanonicalRecord`.  Two independent checks sit next to it:
adjunction residuals through the intersection matrix, and a plain divisor
pullback replayed from the program (compared modulo F0 ~ total transform
of F1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .boundary import (
    D,
    F0,
    FREE,
    ON_D,
    BlowupProgram,
    BoundaryGraph,
    UnsupportedInput,
    blow_up,
    blow_up_step1,
    final_step,
    init_hirzebruch,
)


@dataclass(frozen=True)
class CanonicalRecord:
    alpha: int
    eps: dict[str, int]  # chain fiber curves (F1 or E_i)
    delta: dict[str, int]  # G-components
    mult: dict[str, int]
    d_coeff: int = -2

    def coefficient(self, cid: str) -> int:
        if cid == F0:
            return self.alpha
        if cid == D:
            return self.d_coeff
        if cid in self.eps:
            return self.eps[cid]
        return self.delta.get(cid, 0)

    def perturbed(self, cid: str, by: int = 1) -> "CanonicalRecord":
        """A copy with one coefficient shifted; used for fault injection."""
        if cid in self.delta:
            return CanonicalRecord(self.alpha, self.eps, {**self.delta, cid: self.delta[cid] + by}, self.mult)
        return CanonicalRecord(self.alpha, {**self.eps, cid: self.eps[cid] + by}, self.delta, self.mult)


def canonical_record(g: BoundaryGraph) -> CanonicalRecord:
    if not g.derived:
        raise UnsupportedInput("canonical records are read only from replayed graphs")
    eps, delta, mult = {}, {}, {}
    for c in g.components:
        if c.role in ("F1", "E"):
            eps[c.id] = c.eps
        elif c.role == "G":
            delta[c.id] = c.eps
        mult[c.id] = c.mult
    rec = CanonicalRecord(g.alpha, eps, delta, mult, g.comp(D).eps)
    for gid in delta:
        host = g.host(gid)
        if delta[gid] != eps[host] + 1:
            raise UnsupportedInput(f"{gid}: delta {delta[gid]} != eps({host}) + 1")
    return rec


def adjunction_residuals(g: BoundaryGraph, record: CanonicalRecord | None = None) -> dict[str, int]:
    """K.C + C^2 + 2 for every component C; all zero for a consistent record."""
    rec = record if record is not None else canonical_record(g)
    ids = [c.id for c in g.components]
    out = {}
    for c in ids:
        kc = sum(rec.coefficient(x) * g.intersection(x, c) for x in ids)
        out[c] = kc + g.intersection(c, c) + 2
    return out


@dataclass
class AdjunctionReport:
    residuals: dict[str, int]

    @property
    def ok(self) -> bool:
        return not any(self.residuals.values())

    @property
    def failing(self) -> list[str]:
        return [c for c, r in self.residuals.items() if r]


def adjunction_check(g: BoundaryGraph, record: CanonicalRecord | None = None) -> AdjunctionReport:
    return AdjunctionReport(adjunction_residuals(g, record))


def fiber_products(g: BoundaryGraph) -> dict:
    """Intersections of the total transform F1* = sum(mult * C) with itself, its parts and D."""
    fiber = {c.id: c.mult for c in g.fiber_components()}

    def dot(cid: str) -> int:
        return sum(m * g.intersection(x, cid) for x, m in fiber.items())

    return {
        "self": sum(m * dot(x) for x, m in fiber.items()),
        "components": {x: dot(x) for x in fiber},
        "with_d": dot(D),
        "with_f0": dot(F0),
    }


def fiber_check(g: BoundaryGraph) -> list[str]:
    """Violated fiber identities, empty when F1*^2 = 0, F1*.C = 0 and F1*.D = 1."""
    fp = fiber_products(g)
    bad = []
    if fp["self"] != 0:
        bad.append(f"F1*^2 = {fp['self']}")
    for cid, v in fp["components"].items():
        if v:
            bad.append(f"F1*.{cid} = {v}")
    if fp["with_d"] != 1:
        bad.append(f"F1*.D = {fp['with_d']}")
    if fp["with_f0"] != 0:
        bad.append(f"F1*.F0 = {fp['with_f0']}")
    return bad


# ---------------------------------------------------------------------------
# sign and size bounds along the chain


@dataclass
class InequalityEntry:
    id: str
    role: str
    n: int
    eps: int
    side_e1: str  # "left", "right" or "self"
    side_e0: str
    bound_e1: str  # textual bound checked, or "exempt"
    bound_e0: str
    holds: bool
    tight: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "role": self.role,
            "n": self.n,
            "eps": self.eps,
            "side_e1": self.side_e1,
            "side_e0": self.side_e0,
            "bound_e1": self.bound_e1,
            "bound_e0": self.bound_e0,
            "holds": self.holds,
            "tight": list(self.tight),
        }


@dataclass
class InequalityReport:
    entries: list[InequalityEntry]

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.entries)

    @property
    def failures(self) -> list[InequalityEntry]:
        return [e for e in self.entries if not e.holds]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "components": [e.as_dict() for e in self.entries]}


def check_lemma2(g: BoundaryGraph) -> InequalityReport:
    """Sign and size bounds on eps relative to the frozen positions of E1 and E0.

    Left of E1: eps < -1; right of E1: eps >= 0.  Left of E0: eps < n - 1;
    right of E0: eps >= n.  E1 and E0 themselves are exempt.
    """
    if not g.step1_done:
        return InequalityReport([])
    chain = list(g.chain)
    p1, p0 = chain.index(g.e1_id), chain.index(g.e0_id)
    entries = []
    for cid in g.chain_curves():
        c = g.comp(cid)
        pos = chain.index(cid)
        s1 = "self" if pos == p1 else ("left" if pos < p1 else "right")
        s0 = "self" if pos == p0 else ("left" if pos < p0 else "right")
        if cid in (g.e1_id, g.e0_id):
            entries.append(InequalityEntry(cid, c.role, c.mult, c.eps, s1, s0, "exempt", "exempt", True))
            continue
        holds = True
        tight = []
        if s1 == "left":
            b3 = "eps < -1"
            holds &= c.eps < -1
            if c.eps == -2:
                tight.append("bound_e1")
        else:
            b3 = "eps >= 0"
            holds &= c.eps >= 0
            if c.eps == 0:
                tight.append("bound_e1")
        if s0 == "left":
            b4 = "eps < n - 1"
            holds &= c.eps < c.mult - 1
            if c.eps == c.mult - 2:
                tight.append("bound_e0")
        else:
            b4 = "eps >= n"
            holds &= c.eps >= c.mult
            if c.eps == c.mult:
                tight.append("bound_e0")
        entries.append(InequalityEntry(cid, c.role, c.mult, c.eps, s1, s0, b3, b4, bool(holds), tight))
    return InequalityReport(entries)


# ---------------------------------------------------------------------------
# independent oracle: raw divisor pullback


def pullback_canonical(p: BlowupProgram) -> dict[str, int]:
    """Canonical divisor of the replayed surface by naive pullback.

    Starts from (n-2)F0 - 2D on F_n and applies K' = sigma^*K + E at every
    blow-up, with sigma^* adding to E the coefficients of the curves through
    the blown-up point.  No linear-equivalence rewriting is done, so the
    result differs from the ledger by a multiple of F0 - F1*.
    """
    g = init_hirzebruch(p.base_n, negative_section=True)
    k = {F0: p.base_n - 2, D: -2, "F1": 0}

    def through(before: BoundaryGraph, after: BoundaryGraph, new: str) -> list[str]:
        return [x for x in after.neighbors(new) if x in before]

    def step(before, after, new_ids):
        for new in new_ids:
            pts = through(before, after, new)
            k[new] = sum(k[x] for x in pts) + 1

    if p.step1 is not None:
        after = blow_up_step1(g, p.step1)
        if p.step1 == ON_D:
            k["E1"] = k[D] + k["F1"] + 1
            k["E0"] = k.pop("F1")
        else:
            k["E0"] = k["F1"] + 1
            k["E1"] = k.pop("F1")
        g = after
    for loc in p.interior:
        after = blow_up(g, loc)
        new = [c.id for c in after.components if c.id not in g]
        step(g, after, new)
        g = after
    if p.final:
        after = final_step(g, p.final)
        new = [c.id for c in after.components if c.id not in g]
        step(g, after, new)
        g = after
    return k


def ledger_matches_pullback(p: BlowupProgram, g: BoundaryGraph) -> bool:
    """Ledger minus pullback must be c*(F0 - F1*) for a single integer c."""
    rec = canonical_record(g)
    raw = pullback_canonical(p)
    c = rec.alpha - raw[F0]
    if rec.d_coeff != raw[D]:
        return False
    for comp in g.fiber_components():
        if rec.coefficient(comp.id) - raw[comp.id] != -c * comp.mult:
            return False
    return set(raw) == {x.id for x in g.components}
