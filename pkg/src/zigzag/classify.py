"""Triviality of the canonical class and the H / A∖H split."""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import BlowupProgram, BoundaryGraph, InvalidState, normalize, replay

H = "H"
A_MINUS_H = "A_minus_H"
AFFINE_PLANE = "AffinePlane"


def essential_components(g: BoundaryGraph) -> list[str]:
    """Chain curves meeting at least one G, in chain order."""
    if not g.is_final:
        raise InvalidState("essential components are defined after the final step")
    hosts = g.g_attachments()
    return [c for c in g.chain if c in hosts]


def decide_k_trivial(g: BoundaryGraph) -> int | None:
    """The integer m with eps(E) + 1 = m * mult(E) on every essential E, or None.

    m is read off the first essential curve and verified on the rest.
    """
    ess = essential_components(g)
    first = g.comp(ess[0])
    q, r = divmod(first.eps + 1, first.mult)
    if r:
        return None
    for cid in ess[1:]:
        c = g.comp(cid)
        if c.eps + 1 != q * c.mult:
            return None
    return q


@dataclass(frozen=True)
class Classification:
    k: int  # blow-ups before the final step in the normalized program, step 1 included
    q: int
    k_trivial: bool
    m: int | None
    surface_class: str
    cylinder_label: str
    fixed_point_free_action: bool
    hypersurface_model: str | None
    normalized: BlowupProgram
    steps_taken: int

    def as_dict(self) -> dict:
        from .dsl import format_program

        return {
            "class": self.surface_class,
            "cylinder_label": self.cylinder_label,
            "paper_k": self.k,
            "steps_taken": self.steps_taken,
            "q": self.q,
            "k_trivial": self.k_trivial,
            "m": self.m,
            "fixed_point_free_action": "yes" if self.fixed_point_free_action else "no",
            "hypersurface_model": self.hypersurface_model,
            "normalized_program": format_program(self.normalized),
        }


def classify(p: BlowupProgram) -> Classification:
    norm = normalize(p)
    g = replay(norm)
    k, q = norm.paper_k, norm.q
    m = decide_k_trivial(g)
    if k == 0 and q == 1:
        cls, model = AFFINE_PLANE, "xy = z (the affine plane)"
    elif k == 0:
        cls, model = H, f"xy = p(z), deg p = {q}, simple roots"
    else:
        cls, model = A_MINUS_H, None
    return Classification(
        k=k,
        q=q,
        k_trivial=m is not None,
        m=m,
        surface_class=cls,
        cylinder_label=cls,
        fixed_point_free_action=cls != A_MINUS_H,
        hypersurface_model=model,
        normalized=norm,
        steps_taken=norm.steps_taken,
    )


def pictograph(g: BoundaryGraph) -> str:
    """One-line chain picture, e.g. ``f(0) - d(1) - e1(-2)* - e0(-2)*``; ``*`` marks essential curves."""
    hosts = g.g_attachments() if g.is_final else {}
    parts = []
    for cid in g.chain:
        c = g.comp(cid)
        name = cid.lower() if cid != "F0" else "f"
        mark = "*" * len(hosts.get(cid, []))
        parts.append(f"{name}({c.self_int}){mark}")
    return " - ".join(parts)
