"""Dual graphs of zigzag completions and the blow-up calculus on them.

A completion starts from the Hirzebruch surface F_n with boundary
``F0 - D - F1`` (two fibers and the section D with D^2 = n).  Step 1 blows
up a point of the proto-fiber F1, producing the pair E1 (adjacent to D) and
E0.  Interior steps blow up either a meeting point of two adjacent chain
curves or a free point of the rightmost curve; the final step attaches the
leaf curves G_j whose open parts survive in the affine surface.

Every component carries its self-intersection, its multiplicity in the
total transform of F1, and its coefficient in the tracked representative

    K = alpha*F0 - 2*D + sum(eps_i * E_i) + sum(delta_j * G_j)

of the canonical class (alpha is stored as the ``eps`` of F0).  Graphs are
immutable; every operation returns a new graph.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence, Union

F0, D, F1 = "F0", "D", "F1"
ON_D, FREE = "on-d", "free"
C2_WARNING = "affine part is C^2"


class ZigzagError(ValueError):
    kind = "error"


class InvalidParameter(ZigzagError):
    kind = "invalid-parameter"


class InvalidState(ZigzagError):
    kind = "invalid-state"


class InvalidLocation(ZigzagError):
    kind = "invalid-location"


class LinearityViolation(ZigzagError):
    kind = "linearity-violation"


class NotContractible(ZigzagError):
    kind = "not-contractible"


class UnsupportedInput(ZigzagError):
    kind = "unsupported-input"


@dataclass(frozen=True)
class Component:
    id: str
    role: str  # F0, D, F1, E or G
    self_int: int
    mult: int
    eps: int | None
    case: str = ""  # how the curve was created, for reports


@dataclass(frozen=True)
class Between:
    left: str
    right: str


@dataclass(frozen=True)
class FarRightFree:
    target: str | None = None


Location = Union[Between, FarRightFree]


def _edge(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


_E_ID = re.compile(r"^E(\d+)$")
_G_ID = re.compile(r"^G(\d+)$")


def id_key(cid: str) -> tuple[int, int]:
    """Sort key for curve ids: F0, D, F1, E0, E1, E2, ..., G1, G2, ..."""
    if cid == F0:
        return (0, 0)
    if cid == D:
        return (1, 0)
    if cid == F1:
        return (2, 0)
    m = _E_ID.match(cid)
    if m:
        return (3, int(m.group(1)))
    m = _G_ID.match(cid)
    if m:
        return (4, int(m.group(1)))
    return (5, 0)


@dataclass(frozen=True)
class BoundaryGraph:
    hirzebruch_n: int
    components: tuple[Component, ...]
    chain: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    e1_id: str | None = None
    e0_id: str | None = None
    derived: bool = False  # produced by the blow-up operations, not by hand
    warnings: tuple[str, ...] = ()

    @cached_property
    def _by_id(self) -> dict[str, Component]:
        return {c.id: c for c in self.components}

    def comp(self, cid: str) -> Component:
        try:
            return self._by_id[cid]
        except KeyError:
            raise InvalidLocation(f"no component named {cid!r}") from None

    def __contains__(self, cid: str) -> bool:
        return cid in self._by_id

    @property
    def alpha(self) -> int:
        return self.comp(F0).eps

    @property
    def step1_done(self) -> bool:
        return self.e1_id is not None

    @property
    def is_final(self) -> bool:
        return any(c.role == "G" for c in self.components)

    @property
    def rightmost(self) -> str:
        return self.chain[-1]

    def neighbors(self, cid: str) -> list[str]:
        out = [b if a == cid else a for a, b in self.edges if cid in (a, b)]
        return sorted(out, key=id_key)

    def intersection(self, a: str, b: str) -> int:
        if a == b:
            return self.comp(a).self_int
        return 1 if _edge(a, b) in self.edges else 0

    def fiber_components(self) -> list[Component]:
        """Components of the total transform of F1 (those with mult > 0)."""
        return [c for c in self.components if c.role in ("F1", "E", "G")]

    def g_components(self) -> list[Component]:
        return [c for c in self.components if c.role == "G"]

    def g_attachments(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for c in self.chain:
            hosted = [n for n in self.neighbors(c) if self.comp(n).role == "G"]
            if hosted:
                out[c] = sorted(hosted, key=id_key)
        return out

    def host(self, gid: str) -> str:
        nbrs = self.neighbors(gid)
        if len(nbrs) != 1:
            raise UnsupportedInput(f"{gid} meets {len(nbrs)} curves, expected exactly one")
        return nbrs[0]

    def chain_curves(self) -> list[str]:
        """Fiber curves on the chain: F1 before step 1, the E-chain after."""
        return [c for c in self.chain if self.comp(c).role in ("F1", "E")]

    def next_e_id(self) -> str:
        used = [int(m.group(1)) for c in self.components if (m := _E_ID.match(c.id))]
        return f"E{max(used + [1]) + 1}"

    def next_g_id(self) -> str:
        used = [int(m.group(1)) for c in self.components if (m := _G_ID.match(c.id))]
        return f"G{max(used + [0]) + 1}"

    def _with(self, comps: Iterable[Component], **kw) -> "BoundaryGraph":
        g = replace(self, components=tuple(comps), **kw)
        return replace(g, warnings=_warnings(g))


def _warnings(g: BoundaryGraph) -> tuple[str, ...]:
    if not g.step1_done and len(g.g_components()) == 1:
        return (C2_WARNING,)
    return ()


def _update(comps: Sequence[Component], cid: str, **kw) -> list[Component]:
    return [replace(c, **kw) if c.id == cid else c for c in comps]


def eps_recurrence(case: str, *eps: int) -> int:
    """Canonical coefficient of a new curve from those of the curves it was blown up on.

    ``I``: free point of the far-right curve; ``II``/``III``: meeting point of
    two chain curves left/right of E1; ``IV``: meeting point with D;
    ``G``: a final-step leaf.
    """
    if case in ("I", "G"):
        (e,) = eps
        return e + 1
    if case in ("II", "III"):
        a, b = eps
        return a + b + 1
    if case == "IV":
        (e,) = eps
        return e - 2 + 1
    raise ValueError(f"unknown blow-up case {case!r}")


# ---------------------------------------------------------------------------
# construction steps


def init_hirzebruch(n: int, negative_section: bool = False) -> BoundaryGraph:
    """Boundary F0 - D - F1 on F_n; alpha = n - 2 is forced by adjunction on D.

    ``n`` is the self-intersection of D.  A negative ``n`` (D the negative
    section of F_|n|) only arises from :func:`normalize` and must be asked
    for explicitly.
    """
    if not isinstance(n, int) or (n < 0 and not negative_section):
        raise InvalidParameter(f"Hirzebruch index must be a nonnegative integer, got {n!r}")
    comps = (
        Component(F0, "F0", 0, 0, n - 2, "base"),
        Component(D, "D", n, 0, -2, "base"),
        Component(F1, "F1", 0, 1, 0, "base"),
    )
    return BoundaryGraph(
        hirzebruch_n=n,
        components=comps,
        chain=(F0, D, F1),
        edges=frozenset({_edge(F0, D), _edge(D, F1)}),
        derived=True,
    )


def blow_up_step1(g: BoundaryGraph, choice: str) -> BoundaryGraph:
    """Blow up a point of F1, either F1 ∩ D (``on-d``) or a free point (``free``)."""
    if g.step1_done or F1 not in g or g.is_final:
        raise InvalidState("step 1 applies only to an untouched Hirzebruch boundary")
    f1 = g.comp(F1)
    dd = g.comp(D)
    comps = [c for c in g.components if c.id != F1]
    if choice == ON_D:
        # new curve E1 sits between D and the proper transform E0 of F1
        e1 = Component("E1", "E", -1, f1.mult + dd.mult, f1.eps + dd.eps + 1, "step1-on-d")
        e0 = replace(f1, id="E0", role="E", self_int=f1.self_int - 1)
        comps = _update(comps, D, self_int=dd.self_int - 1)
        comps.insert(2, e0)
        comps.append(e1)
        alpha = g.alpha
    elif choice == FREE:
        # E1 is the proper transform of F1; absorb the pullback via F0 ~ E1 + E0
        e1 = replace(f1, id="E1", role="E", self_int=f1.self_int - 1, eps=f1.eps - 1)
        e0 = Component("E0", "E", -1, f1.mult, f1.eps + 1 - 1, "step1-free")
        comps.insert(2, e1)
        comps.append(e0)
        alpha = g.alpha + 1
    else:
        raise InvalidParameter(f"step-1 choice must be {ON_D!r} or {FREE!r}, got {choice!r}")
    comps = _update(comps, F0, eps=alpha)
    return g._with(
        comps,
        chain=(F0, D, "E1", "E0"),
        edges=frozenset({_edge(F0, D), _edge(D, "E1"), _edge("E1", "E0")}),
        e1_id="E1",
        e0_id="E0",
    )


def blow_up(g: BoundaryGraph, loc: Location) -> BoundaryGraph:
    """One interior step: blow up a chain meeting point or a free point at the far right."""
    if not g.step1_done:
        raise InvalidState("interior blow-ups require step 1")
    if g.is_final:
        raise InvalidState("G-components are attached; no further blow-ups")
    new = g.next_e_id()
    chain = list(g.chain)
    edges = set(g.edges)
    if isinstance(loc, Between):
        a, b = loc.left, loc.right
        for c in (a, b):
            if c not in chain:
                raise InvalidLocation(f"{c!r} is not a chain component")
        ia, ib = chain.index(a), chain.index(b)
        if ia > ib:
            a, b, ia, ib = b, a, ib, ia
        if ib - ia != 1:
            raise InvalidLocation(f"{a} and {b} do not meet")
        if a == F0:
            raise InvalidLocation("the point F0 ∩ D is never blown up")
        ca, cb = g.comp(a), g.comp(b)
        if a == D:
            case = "IV"
            eps = eps_recurrence(case, cb.eps)
        else:
            pos1 = chain.index(g.e1_id)
            case = "II" if ib <= pos1 else "III"
            eps = eps_recurrence(case, ca.eps, cb.eps)
        comps = _update(g.components, a, self_int=ca.self_int - 1)
        comps = _update(comps, b, self_int=cb.self_int - 1)
        comps.append(Component(new, "E", -1, ca.mult + cb.mult, eps, case))
        chain.insert(ib, new)
        edges.discard(_edge(a, b))
        edges |= {_edge(a, new), _edge(new, b)}
    elif isinstance(loc, FarRightFree):
        r = chain[-1]
        if loc.target is not None and loc.target != r:
            raise LinearityViolation(
                f"a free point of {loc.target} is not at the far right ({r}); the graph would branch"
            )
        cr = g.comp(r)
        comps = _update(g.components, r, self_int=cr.self_int - 1)
        comps.append(Component(new, "E", -1, cr.mult, eps_recurrence("I", cr.eps), "I"))
        chain.append(new)
        edges.add(_edge(r, new))
    else:
        raise InvalidParameter(f"unknown blow-up location {loc!r}")
    return g._with(comps, chain=tuple(chain), edges=frozenset(edges))


def final_step(g: BoundaryGraph, attachments: Sequence[str]) -> BoundaryGraph:
    """Attach one leaf G per entry of ``attachments`` (repeats allowed)."""
    attachments = list(attachments)
    if not attachments:
        raise InvalidParameter("the final step needs at least one attachment")
    if g.is_final:
        raise InvalidState("final step already performed")
    comps = list(g.components)
    edges = set(g.edges)
    by_id = {c.id: c for c in comps}
    used = [int(m.group(1)) for c in comps if (m := _G_ID.match(c.id))]
    nxt = max(used + [0]) + 1
    for h in attachments:
        if h not in by_id or h not in g.chain:
            raise InvalidLocation(f"{h!r} is not a chain component")
        host = by_id[h]
        if host.role not in ("E", "F1"):
            raise InvalidLocation(f"G-components attach to fiber curves only, not {h}")
        gid = f"G{nxt}"
        nxt += 1
        comps = _update(comps, h, self_int=host.self_int - 1)
        comps.append(Component(gid, "G", -1, host.mult, eps_recurrence("G", host.eps), "G"))
        by_id = {c.id: c for c in comps}
        edges.add(_edge(h, gid))
    return g._with(comps, edges=frozenset(edges))


def contract(g: BoundaryGraph, cid: str) -> BoundaryGraph:
    """Blow down the (-1)-curve ``cid``; the inverse of the step that created it.

    Contracting E1 or E0 while later chain curves exist would change which
    curves play the step-1 roles; that is only supported at program level
    (see :func:`normalize`).
    """
    c = g.comp(cid)
    if c.self_int != -1:
        raise NotContractible(f"{cid} has self-intersection {c.self_int}, not -1")
    if c.role in ("F0", "D", "F1"):
        raise NotContractible(f"{cid} is a fixed curve of the base boundary")
    nbrs = g.neighbors(cid)
    if len(nbrs) > 2:
        raise LinearityViolation(f"{cid} meets {len(nbrs)} curves")
    comps = [x for x in g.components if x.id != cid]
    edges = {e for e in g.edges if cid not in e}
    if c.role == "G":
        h = g.comp(nbrs[0])
        comps = _update(comps, h.id, self_int=h.self_int + 1)
        return g._with(comps, edges=frozenset(edges))
    if any(g.comp(n).role == "G" for n in nbrs):
        raise LinearityViolation(f"{cid} carries G-components")
    chain = list(g.chain)
    i = chain.index(cid)
    left = chain[i - 1]
    right = chain[i + 1] if i + 1 < len(chain) else None
    step1_curve = cid in (g.e1_id, g.e0_id)
    if step1_curve and len(g.chain_curves()) > 2:
        raise InvalidState(
            f"contracting step-1 curve {cid} with later curves present reassigns E1/E0; normalize the program instead"
        )
    for n in (left, right):
        if n is not None:
            comps = _update(comps, n, self_int=g.comp(n).self_int + 1)
    if right is not None:
        edges.add(_edge(left, right))
    chain.pop(i)
    if not step1_curve:
        return g._with(comps, chain=tuple(chain), edges=frozenset(edges))
    # back to the base: the survivor becomes F1, and its coefficient moves to F0
    survivor = g.e0_id if cid == g.e1_id else g.e1_id
    by_id = {x.id: x for x in comps}
    shift = by_id[survivor].eps
    out = []
    for x in comps:
        if x.id == F0:
            x = replace(x, eps=x.eps + shift)
        elif x.role in ("E", "G"):
            x = replace(x, eps=x.eps - shift * x.mult)
        if x.id == survivor:
            x = replace(x, id=F1, role="F1", case="base")
        out.append(x)
    ren = {survivor: F1}
    edges = {_edge(ren.get(a, a), ren.get(b, b)) for a, b in edges}
    chain = [ren.get(x, x) for x in chain]
    n = by_id[D].self_int
    return g._with(
        out,
        hirzebruch_n=n,
        chain=tuple(chain),
        edges=frozenset(edges),
        e1_id=None,
        e0_id=None,
    )


# ---------------------------------------------------------------------------
# programs


@dataclass(frozen=True)
class BlowupProgram:
    """A replayable construction: base F_n, optional step 1, interior steps, final leaves."""

    base_n: int  # D^2 on the base; negative only after normalize
    step1: str | None = None
    interior: tuple[Location, ...] = ()
    final: tuple[str, ...] = ()

    @property
    def paper_k(self) -> int:
        """Blow-ups before the final step, counting step 1."""
        return (self.step1 is not None) + len(self.interior)

    @property
    def steps_taken(self) -> int:
        """Interior steps only (after step 1, before the final step)."""
        return len(self.interior)

    @property
    def q(self) -> int:
        return len(self.final)


def replay_trace(p: BlowupProgram) -> list[BoundaryGraph]:
    """Graphs after step 0, step 1 (if any), every interior step and the final step."""
    if p.step1 is None and p.interior:
        raise InvalidState("interior steps require step 1")
    g = init_hirzebruch(p.base_n, negative_section=True)
    trace = [g]
    if p.step1 is not None:
        g = blow_up_step1(g, p.step1)
        trace.append(g)
    for loc in p.interior:
        g = blow_up(g, loc)
        trace.append(g)
    if p.final:
        trace.append(final_step(g, p.final))
    return trace


def replay(p: BlowupProgram) -> BoundaryGraph:
    return replay_trace(p)[-1]


def canonical(p: BlowupProgram) -> BlowupProgram:
    """Same program with Between pairs and attachments in chain order (left to right)."""
    g = init_hirzebruch(p.base_n, negative_section=True)
    if p.step1 is not None:
        g = blow_up_step1(g, p.step1)
    steps = []
    for loc in p.interior:
        if isinstance(loc, Between):
            a, b = loc.left, loc.right
            if g.chain.index(a) > g.chain.index(b):
                a, b = b, a
            loc = Between(a, b)
        else:
            loc = FarRightFree()
        g = blow_up(g, loc)
        steps.append(loc)
    pos = {c: i for i, c in enumerate(g.chain)}
    return BlowupProgram(p.base_n, p.step1, tuple(steps), tuple(sorted(p.final, key=lambda c: pos.get(c, len(pos)))))


@dataclass
class _Op:
    new: str
    on: tuple[str, ...]


def _to_ops(p: BlowupProgram):
    trace = replay_trace(replace(p, final=()))
    ops: list[_Op] = []
    if p.step1 == ON_D:
        proto = "E0"
        ops.append(_Op("E1", (D, "E0")))
    elif p.step1 == FREE:
        proto = "E1"
        ops.append(_Op("E0", ("E1",)))
    else:
        proto = F1
    offset = 2 if p.step1 is not None else 1
    for j, loc in enumerate(p.interior):
        before, after = trace[offset + j - 1], trace[offset + j]
        new = next(c for c in after.chain if c not in before.chain)
        i = after.chain.index(new)
        if isinstance(loc, Between):
            ops.append(_Op(new, (after.chain[i - 1], after.chain[i + 1])))
        else:
            ops.append(_Op(new, (after.chain[i - 1],)))
    return p.base_n, proto, ops, list(p.final)


def _from_ops(base_n: int, proto: str, ops: list[_Op], final: list[str]) -> BlowupProgram:
    if not ops:
        names = {proto: F1}
        step1 = None
    else:
        op0 = ops[0]
        if set(op0.on) == {D, proto}:
            step1 = ON_D
            names = {op0.new: "E1", proto: "E0"}
        elif op0.on == (proto,):
            step1 = FREE
            names = {proto: "E1", op0.new: "E0"}
        else:
            raise InvalidState(f"first blow-up {op0} does not touch the proto-fiber")
    steps: list[Location] = []
    for j, op in enumerate(ops[1:]):
        names[op.new] = f"E{j + 2}"
        if len(op.on) == 2:
            steps.append(Between(*(names.get(x, x) for x in op.on)))
        else:
            steps.append(FarRightFree())
    return canonical(
        BlowupProgram(base_n, step1, tuple(steps), tuple(names.get(h, h) for h in final))
    )


def _contract_op(base_n: int, proto: str, ops: list[_Op], cid: str):
    for i, op in enumerate(ops):
        if op.new == cid:
            return base_n, proto, ops[:i] + ops[i + 1 :]
    if cid == proto:
        op0 = ops[0]
        # proto-fiber meets D only if step 1 was a free point
        base_n = base_n - 1 if D in op0.on else base_n + 1
        return base_n, op0.new, ops[1:]
    raise InvalidState(f"{cid} was not created by any step")


def minus_one_chain_curves(g: BoundaryGraph) -> list[str]:
    return [c for c in g.chain_curves() if g.comp(c).self_int == -1]


def normalize(p: BlowupProgram) -> BlowupProgram:
    """Contract chain (-1)-curves until none is left, changing the base when F1 goes.

    A curve created by an interior step is removed by dropping that step.
    The proper transform of F1 can only be a (-1)-curve if nothing but step 1
    touched it; blowing it down instead of step 1's curve moves the base to
    F_{n-1} (step 1 on D) or F_{n+1} (free step 1).  The k = 0, q = 1 case
    (the affine plane) is left alone.
    """
    current = p
    while True:
        g = replay(current)
        if not g.step1_done:
            return current
        bad = minus_one_chain_curves(g)
        if not bad:
            return current
        base_n, proto, ops, final = _to_ops(current)
        base_n, proto, ops = _contract_op(base_n, proto, ops, bad[0])
        current = _from_ops(base_n, proto, ops, final)


# ---------------------------------------------------------------------------
# matrices, validation, output


def intersection_matrix(g: BoundaryGraph) -> list[list[int]]:
    ids = [c.id for c in g.components]
    return [[g.intersection(a, b) for b in ids] for a in ids]


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v and k != "minimal"]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def minimal(self) -> bool:
        return self.checks.get("minimal", False)


def validate(g: BoundaryGraph) -> ValidationReport:
    """Check the structural invariants; never raises."""
    rep = ValidationReport()

    def check(name: str, cond: bool, msg: str) -> None:
        rep.checks[name] = rep.checks.get(name, True) and cond
        if not cond:
            rep.messages.append(msg)

    roles = [c.role for c in g.components]
    check("unique_f0_d", roles.count("F0") == 1 and roles.count("D") == 1, "need exactly one F0 and one D")
    ids = {c.id for c in g.components}
    check("chain_start", g.chain[:2] == (F0, D), "chain must start F0, D")
    check("chain_known", all(c in ids for c in g.chain), "chain names unknown components")
    for i, a in enumerate(g.chain):
        for j in range(i + 1, len(g.chain)):
            b = g.chain[j]
            meets = _edge(a, b) in g.edges
            if j == i + 1:
                check("linear", meets, f"consecutive chain curves {a}, {b} do not meet")
            else:
                check("linear", not meets, f"non-consecutive chain curves {a}, {b} meet")
    for c in g.components:
        nbrs = [n for n in (b if a == c.id else a for a, b in g.edges if c.id in (a, b))]
        if c.role == "G":
            on_chain = [n for n in nbrs if n in g.chain]
            check("g_leaf", len(nbrs) == 1 and len(on_chain) == 1, f"{c.id} must meet exactly one chain curve")
            if len(on_chain) == 1 and on_chain[0] in ids:
                host = next(x for x in g.components if x.id == on_chain[0])
                check("g_host", host.role in ("E", "F1"), f"{c.id} is attached to {host.id}")
        elif c.id not in g.chain:
            check("chain_known", False, f"{c.id} is neither on the chain nor a G")
        if c.role in ("E", "G", "F1"):
            check("mult_positive", c.mult >= 1, f"{c.id} has multiplicity {c.mult}")
        if c.role == "D":
            check("d_coeff", c.eps == -2, "the coefficient of D must be -2")
    for a, b in g.edges:
        check("edges_known", a in ids and b in ids, f"edge {a}-{b} names unknown components")
    minimal = not g.step1_done or not any(
        g.comp(c).self_int == -1 for c in g.chain if c in ids and g.comp(c).role == "E"
    )
    rep.checks["minimal"] = minimal
    return rep


def snapshot(g: BoundaryGraph) -> dict:
    """JSON-ready record of the graph; key order is fixed."""
    return {
        "hirzebruch_n": g.hirzebruch_n,
        "alpha": g.alpha,
        "e1": g.e1_id,
        "e0": g.e0_id,
        "chain": list(g.chain),
        "components": [
            {
                "id": c.id,
                "role": c.role,
                "self_int": c.self_int,
                "mult": c.mult,
                "eps": c.eps,
                "case": c.case,
            }
            for c in g.components
        ],
        "edges": [list(e) for e in sorted(g.edges, key=lambda e: (id_key(e[0]), id_key(e[1])))],
        "warnings": list(g.warnings),
    }


def to_json(g: BoundaryGraph) -> str:
    return json.dumps(snapshot(g), indent=2)


def to_dot(g: BoundaryGraph, name: str = "zigzag") -> str:
    """Graphviz text; node labels read ``role / self_int / n / eps``."""
    lines = [f"graph {name} {{", "  rankdir=LR;"]
    for c in g.components:
        shape = "box" if c.role == "G" else "ellipse"
        eps = "-" if c.eps is None else c.eps
        label = f"{c.id} {c.role} / {c.self_int} / {c.mult} / {eps}"
        lines.append(f'  "{c.id}" [label="{label}", shape={shape}];')
    for a, b in sorted(g.edges, key=lambda e: (id_key(e[0]), id_key(e[1]))):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
