"""Exhaustive enumeration of blow-up programs and bulk verification.

Bounds: ``max_k`` limits paper_k, the number of blow-ups before the final
step counting step 1 (so max_k = 0 gives only the leaves-on-F1 programs and
max_k = 1 adds step 1 without interior steps).  ``max_q`` limits the number
of G-leaves.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator

from .boundary import (
    FREE,
    ON_D,
    Between,
    BlowupProgram,
    BoundaryGraph,
    FarRightFree,
    blow_up,
    blow_up_step1,
    contract,
    final_step,
    init_hirzebruch,
    normalize,
    replay,
    validate,
)
from .canonical import adjunction_check, check_lemma2, fiber_check, ledger_matches_pullback
from .classify import decide_k_trivial

CHECKS = ("lemma2", "lemma4", "adjunction", "fiber", "roundtrip")
K_CONVENTION = (
    "paper_k counts every blow-up before the final step, step 1 included; "
    "steps_taken counts interior steps only (paper_k - 1 when step 1 is present)"
)


@dataclass(frozen=True)
class EnumSpec:
    max_k: int
    max_q: int
    base_n_range: tuple[int, int] = (0, 0)  # inclusive
    checks: frozenset[str] = frozenset(CHECKS)

    def __post_init__(self) -> None:
        lo, hi = self.base_n_range
        if self.max_k < 0 or self.max_q < 0 or lo < 0 or hi < lo:
            raise ValueError(f"invalid enumeration bounds {self}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")


def interior_locations(g: BoundaryGraph) -> list:
    """Legal interior blow-ups of ``g``, left to right, far-right free point last."""
    chain = g.chain
    locs = [Between(a, b) for a, b in zip(chain[1:], chain[2:])]
    locs.append(FarRightFree())
    return locs


@dataclass
class _Stem:
    step1: str | None
    steps: tuple
    trace: list[BoundaryGraph]  # base graph first, pre-final graph last


def _stems(n: int, max_k: int, part: str | None | object = ...) -> Iterator[_Stem]:
    g0 = init_hirzebruch(n)
    if part is ... or part is None:
        yield _Stem(None, (), [g0])
    if max_k < 1:
        return
    choices = (ON_D, FREE) if part is ... else ((part,) if part is not None else ())

    def dfs(stem: _Stem):
        yield stem
        if 1 + len(stem.steps) < max_k:
            g = stem.trace[-1]
            for loc in interior_locations(g):
                yield from dfs(_Stem(stem.step1, stem.steps + (loc,), stem.trace + [blow_up(g, loc)]))

    for choice in choices:
        yield from dfs(_Stem(choice, (), [g0, blow_up_step1(g0, choice)]))


def _attachments(g: BoundaryGraph, max_q: int) -> Iterator[tuple[str, ...]]:
    hosts = g.chain_curves()
    for q in range(1, max_q + 1):
        yield from combinations_with_replacement(hosts, q)


def _programs(spec: EnumSpec, part=...) -> Iterator[tuple[BlowupProgram, _Stem]]:
    lo, hi = spec.base_n_range
    for n in range(lo, hi + 1):
        for stem in _stems(n, spec.max_k, part):
            for hosts in _attachments(stem.trace[-1], spec.max_q):
                yield BlowupProgram(n, stem.step1, stem.steps, hosts), stem


def enumerate_programs(spec: EnumSpec) -> Iterator[BlowupProgram]:
    """Every legal program within the bounds, exactly once, in canonical order."""
    for p, _ in _programs(spec):
        yield p


def count_programs(spec: EnumSpec) -> int:
    return sum(1 for _ in enumerate_programs(spec))


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyReport:
    programs_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    by_paper_k: Counter = field(default_factory=Counter)
    roundtrip_applicable: int = 0
    roundtrip_passed: int = 0
    graphs_checked: int = 0
    tight: Counter = field(default_factory=Counter)
    k_trivial_programs: int = 0

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        return VerifyReport(
            self.programs_checked + other.programs_checked,
            self.failures + other.failures,
            self.by_paper_k + other.by_paper_k,
            self.roundtrip_applicable + other.roundtrip_applicable,
            self.roundtrip_passed + other.roundtrip_passed,
            self.graphs_checked + other.graphs_checked,
            self.tight + other.tight,
            self.k_trivial_programs + other.k_trivial_programs,
        )

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "k_convention": K_CONVENTION,
            "programs_checked": self.programs_checked,
            "graphs_checked": self.graphs_checked,
            "programs_by_paper_k": {str(k): self.by_paper_k[k] for k in sorted(self.by_paper_k)},
            "k_trivial_programs": self.k_trivial_programs,
            "roundtrip": {"applicable": self.roundtrip_applicable, "passed": self.roundtrip_passed},
            "tight_inequalities": {k: self.tight[k] for k in sorted(self.tight)},
            "failures": self.failures,
            "ok": self.ok,
        }


def _graph_checks(g: BoundaryGraph, checks, rep: VerifyReport, lemma2: bool) -> list[tuple[str, str]]:
    bad = []
    rep.graphs_checked += 1
    v = validate(g)
    if not v.ok:
        bad.append(("validate", "; ".join(v.messages)))
    if "adjunction" in checks:
        adj = adjunction_check(g)
        if not adj.ok:
            bad.append(("adjunction", f"nonzero residuals on {', '.join(adj.failing)}"))
    if "fiber" in checks:
        f = fiber_check(g)
        if f:
            bad.append(("fiber", "; ".join(f)))
    if lemma2 and "lemma2" in checks and g.step1_done:
        rep2 = check_lemma2(g)
        for e in rep2.entries:
            for t in e.tight:
                side = e.side_e1 if t == "bound_e1" else e.side_e0
                rep.tight[f"{t}:{side}"] += 1
        if not rep2.ok:
            ids = ", ".join(f"{e.id}(n={e.n}, eps={e.eps})" for e in rep2.failures)
            bad.append(("lemma2", ids))
    return bad


def _stem_checks(stem: _Stem, checks, rep: VerifyReport) -> list[tuple[str, str]]:
    # every prefix of a stem is itself an enumerated stem, so only its last graph is new
    bad = _graph_checks(stem.trace[-1], checks, rep, lemma2=True)
    if "roundtrip" in checks and len(stem.trace) > 1:
        for before, after in [stem.trace[-2:]]:
            if not before.step1_done:
                # step 1 renames F1, so name its exceptional curve directly
                new = ["E1" if stem.step1 == ON_D else "E0"]
            else:
                new = [c.id for c in after.components if c.id not in before]
            rep.roundtrip_applicable += 1
            if contract(after, new[-1]) == before:
                rep.roundtrip_passed += 1
            else:
                bad.append(("roundtrip", f"contracting {new[-1]} does not undo its blow-up"))
    return bad


def _program_checks(p: BlowupProgram, stem: _Stem, checks, rep: VerifyReport) -> list[tuple[str, str]]:
    pre = stem.trace[-1]
    g = final_step(pre, p.final)
    bad = _graph_checks(g, checks, rep, lemma2=False)
    if "adjunction" in checks and not ledger_matches_pullback(p, g):
        bad.append(("adjunction", "incremental ledger disagrees with the pullback oracle"))
    if "roundtrip" in checks:
        gids = [c.id for c in g.g_components()]
        cur = g
        for j in range(len(gids), 0, -1):
            cur = contract(cur, gids[j - 1])
            expect = final_step(pre, p.final[: j - 1]) if j > 1 else pre
            rep.roundtrip_applicable += 1
            if cur == expect:
                rep.roundtrip_passed += 1
            else:
                bad.append(("roundtrip", f"contracting {gids[j - 1]} does not undo its attachment"))
    m_raw = decide_k_trivial(g)
    if "lemma4" in checks:
        norm = normalize(p)
        gn = replay(norm)
        m = decide_k_trivial(gn)
        k0 = norm.paper_k == 0
        if (m is not None) != k0:
            bad.append(("lemma4", f"normalized paper_k={norm.paper_k} but m={m}"))
        elif k0 and m != 1:
            bad.append(("lemma4", f"k = 0 with m = {m}, expected 1"))
        if (m_raw is not None) != (m is not None):
            bad.append(("lemma4", "K-triviality changed under normalization"))
        if not validate(gn).minimal:
            bad.append(("lemma4", "normalized program still has a chain (-1)-curve"))
    if m_raw is not None:
        rep.k_trivial_programs += 1
    return bad


def _verify_part(spec: EnumSpec, part=...) -> VerifyReport:
    from .dsl import format_program

    rep = VerifyReport()
    checks = spec.checks
    last_stem, stem_bad = None, []
    for p, stem in _programs(spec, part):
        if stem is not last_stem:
            last_stem, stem_bad = stem, _stem_checks(stem, checks, rep)
        bad = stem_bad + _program_checks(p, stem, checks, rep)
        rep.programs_checked += 1
        rep.by_paper_k[p.paper_k] += 1
        for check, detail in bad:
            rep.failures.append({"program": format_program(p), "check": check, "detail": detail})
    return rep


def verify(spec: EnumSpec, workers: int = 1) -> VerifyReport:
    """Run the selected checks on every enumerated program.

    With ``workers > 1`` the enumeration is split by base surface and step-1
    choice; merged reports keep that fixed partition order.
    """
    if workers <= 1:
        return _verify_part(spec)
    lo, hi = spec.base_n_range
    parts = []
    for n in range(lo, hi + 1):
        sub = EnumSpec(spec.max_k, spec.max_q, (n, n), spec.checks)
        parts.append((sub, None))
        if spec.max_k >= 1:
            parts += [(sub, ON_D), (sub, FREE)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(_verify_part, *zip(*parts)))
    out = VerifyReport()
    for r in results:
        out = out.merge(r)
    return out
