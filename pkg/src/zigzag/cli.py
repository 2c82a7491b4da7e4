"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on unreadable or malformed input (with ``file:line:col`` where known).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .boundary import ZigzagError, replay, replay_trace, snapshot, to_dot, validate
from .canonical import adjunction_check, check_lemma2, fiber_check
from .classify import classify, pictograph
from .danielewski import certificates, embedding_witness, from_roots, zigzag_of
from .dsl import DslError, format_program, parse_program, parse_ring
from .enumerator import CHECKS, K_CONVENTION, EnumSpec, verify, enumerate_programs
from .lnd import DEFAULT_CAP, is_fixed_point_free, is_lnd

FORMATS = ("text", "json", "dot")


class InputError(Exception):
    """Reported with exit code 2."""


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not valid UTF-8") from None


def _program(path: str):
    try:
        return parse_program(_read(path))
    except DslError as exc:
        raise InputError(f"{path}:{exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _no_dot(fmt: str, command: str) -> None:
    if fmt == "dot":
        raise InputError(f"{command} has no dot output; use text or json")


# ---------------------------------------------------------------------------
# commands; each returns (exit code, report text)


def cmd_classify(args) -> tuple[int, str]:
    p = _program(args.file)
    c = classify(p)
    g = replay(c.normalized)
    if args.format == "dot":
        return 0, to_dot(g)
    rep = c.as_dict()
    rep["pictograph"] = pictograph(g)
    if args.format == "json":
        return 0, _dump(rep)
    lines = [
        f"class: {rep['class']}",
        f"cylinder label: {rep['cylinder_label']}",
        f"paper_k: {rep['paper_k']} (interior steps: {rep['steps_taken']})",
        f"q: {rep['q']}",
        f"k_trivial: {'yes' if c.k_trivial else 'no'}" + (f" (m = {c.m})" if c.m is not None else ""),
        f"admits fixed-point-free C+-action: {rep['fixed_point_free_action']}",
    ]
    if c.hypersurface_model:
        lines.append(f"hypersurface model: {c.hypersurface_model}")
    lines.append(f"zigzag: {rep['pictograph']}")
    lines.append("normalized program:")
    lines.extend("  " + ln for ln in rep["normalized_program"].splitlines())
    return 0, "\n".join(lines) + "\n"


def _check_graph(g) -> dict:
    adj = adjunction_check(g)
    v = validate(g)
    out = {
        "validate": v.messages,
        "adjunction": {c: r for c, r in adj.residuals.items() if r},
        "fiber": fiber_check(g),
    }
    if g.step1_done and not g.is_final:
        out["lemma2"] = check_lemma2(g).as_dict()
    return out


def cmd_check(args) -> tuple[int, str]:
    p = _program(args.file)
    trace = replay_trace(p)
    final = trace[-1]
    if args.format == "dot":
        return 0, to_dot(final)
    steps = []
    ok = True
    for i, g in enumerate(trace):
        res = _check_graph(g)
        passed = not res["validate"] and not res["adjunction"] and not res["fiber"]
        if "lemma2" in res:
            passed &= res["lemma2"]["ok"]
        ok &= passed
        steps.append({"step": i, "ok": passed, **res})
    rep = {"program": format_program(p), "ok": ok, "steps": steps, "final": snapshot(final)}
    code = 0 if ok else 1
    if args.format == "json":
        return code, _dump(rep)
    lines = []
    for s in steps:
        detail = []
        if s["validate"]:
            detail.append("validate: " + "; ".join(s["validate"]))
        if s["adjunction"]:
            detail.append("adjunction residuals on " + ", ".join(s["adjunction"]))
        if s["fiber"]:
            detail.append("fiber: " + "; ".join(s["fiber"]))
        if "lemma2" in s and not s["lemma2"]["ok"]:
            bad = [e["id"] for e in s["lemma2"]["components"] if not e["holds"]]
            detail.append("inequalities fail on " + ", ".join(bad))
        lines.append(f"step {s['step']}: {'ok' if s['ok'] else 'FAIL'}" + (" (" + "; ".join(detail) + ")" if detail else ""))
    lines.append(f"zigzag: {pictograph(final)}")
    lines.append("all checks pass" if ok else "some checks FAILED")
    return code, "\n".join(lines) + "\n"


def _base_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise InputError(f"--base-n expects N or LO..HI, got {text!r}") from None


def _checks(text: str | None) -> frozenset[str]:
    if text is None:
        return frozenset()
    if text == "all":
        return frozenset(CHECKS)
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise InputError(f"unknown check {unknown[0]!r}; choose from {', '.join(CHECKS)} or 'all'")
    return frozenset(names)


def cmd_enumerate(args) -> tuple[int, str]:
    _no_dot(args.format, "enumerate")
    checks = _checks(args.verify)
    try:
        spec = EnumSpec(args.max_k, args.max_q, _base_range(args.base_n), checks)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bounds = {"max_k": spec.max_k, "max_q": spec.max_q, "base_n_range": list(spec.base_n_range)}
    if not checks:
        by_k: dict[int, int] = {}
        for p in enumerate_programs(spec):
            by_k[p.paper_k] = by_k.get(p.paper_k, 0) + 1
        rep = {
            "k_convention": K_CONVENTION,
            "bounds": bounds,
            "programs": sum(by_k.values()),
            "programs_by_paper_k": {str(k): by_k[k] for k in sorted(by_k)},
        }
        if args.format == "json":
            return 0, _dump(rep)
        lines = [f"# {K_CONVENTION}", f"programs: {rep['programs']}"]
        lines += [f"  paper_k = {k}: {v}" for k, v in rep["programs_by_paper_k"].items()]
        return 0, "\n".join(lines) + "\n"
    result = verify(spec, workers=args.workers)
    rep = {"bounds": bounds, "checks": sorted(checks), **result.as_dict()}
    code = 0 if result.ok else 1
    if args.format == "json":
        return code, _dump(rep)
    lines = [
        f"# {K_CONVENTION}",
        f"checks: {', '.join(sorted(checks))}",
        f"programs checked: {result.programs_checked}",
        f"graphs checked: {result.graphs_checked}",
    ]
    lines += [f"  paper_k = {k}: {v}" for k, v in rep["programs_by_paper_k"].items()]
    if "roundtrip" in checks:
        lines.append(f"round trips: {result.roundtrip_passed}/{result.roundtrip_applicable}")
    lines.append(f"K-trivial programs: {result.k_trivial_programs}")
    lines.append(f"failures: {len(result.failures)}")
    for f in result.failures[:20]:
        prog = f["program"].strip().replace("\n", " / ")
        lines.append(f"  {f['check']}: {f['detail']} [{prog}]")
    if len(result.failures) > 20:
        lines.append(f"  ... {len(result.failures) - 20} more")
    return code, "\n".join(lines) + "\n"


def cmd_lnd(args) -> tuple[int, str]:
    _no_dot(args.format, "lnd")
    try:
        rf = parse_ring(_read(args.file))
    except DslError as exc:
        raise InputError(f"{args.file}:{exc}") from None
    if not rf.derivations:
        raise InputError(f"{args.file}: no derivation blocks")
    results = []
    for d in rf.derivations:
        v = is_lnd(d, args.cap)
        entry = v.as_dict()
        entry["fixed_point_free"] = is_fixed_point_free(d) if v.status != "no" else None
        results.append(entry)
    code = 0 if all(r["status"] == "certified-yes" for r in results) else 1
    if args.format == "json":
        return code, _dump({"cap": args.cap, "derivations": results})
    lines = []
    for r in results:
        line = f"{r['derivation']}: {r['status']}"
        if r["indices"]:
            line += " (nilpotency " + ", ".join(f"{v}:{i if i is not None else '>cap'}" for v, i in r["indices"].items()) + ")"
        if r["fixed_point_free"] is not None:
            line += f"; fixed-point-free: {'yes' if r['fixed_point_free'] else 'no'}"
        if "witness" in r:
            w = r["witness"]
            line += f"; relation {w['relation']} maps to {w['image_normal_form']} outside the ideal"
        lines.append(line)
    return code, "\n".join(lines) + "\n"


def _roots(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--roots expects comma-separated rationals, got {text!r}") from None


def cmd_danielewski(args) -> tuple[int, str]:
    roots = _roots(args.roots)
    if not roots:
        raise InputError("--roots needs at least one root")
    s = from_roots(roots)
    certs = certificates(s, args.cap)
    ok = s.smooth and all(c["status"] == "certified-yes" and c["fixed_point_free"] for c in certs.values())
    rep = {
        "relation": f"{s.relation} = 0",
        "q": s.q,
        "smooth": s.smooth,
        "derivations": certs,
    }
    program = None
    if s.smooth:
        program = zigzag_of(s)
        w = embedding_witness(s)
        rep["embedding_witness"] = {
            "rho": str(w.rho),
            "v": str(w.v),
            "u": str(w.u),
            "identity_certified": w.identity_certified,
            "component_values": [str(x) for x in w.component_values],
            "values_distinct": w.values_distinct,
            "v_linear_on_components": w.v_linear_on_components,
        }
        rep["zigzag_program"] = format_program(program)
        rep["class"] = classify(program).surface_class
        ok &= w.identity_certified and w.values_distinct and w.v_linear_on_components
    if args.program_out and program is not None:
        try:
            with open(args.program_out, "w", encoding="utf-8") as fh:
                fh.write(format_program(program))
        except OSError as exc:
            raise InputError(f"{args.program_out}: {exc.strerror}") from None
    code = 0 if ok else 1
    if args.format == "dot":
        if program is None:
            raise InputError("no zigzag for a singular surface")
        return code, to_dot(replay(program))
    if args.format == "json":
        return code, _dump(rep)
    lines = [f"surface: {rep['relation']}", f"q: {s.q}", f"smooth: {'yes' if s.smooth else 'no'}"]
    for name, c in certs.items():
        fpf = "yes" if c["fixed_point_free"] else "no"
        lines.append(f"{name}: {c['status']}; fixed-point-free: {fpf}")
    if program is not None:
        lines.append(f"class: {rep['class']}")
        lines.append("zigzag program:")
        lines.extend("  " + ln for ln in rep["zigzag_program"].splitlines())
    return code, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zigzag", description="Zigzag completions of quasihomogeneous surfaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify the surface of a blow-up program")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="run graph checks after every step of a program")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate programs and optionally verify them")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--base-n", default="0", help="N or LO..HI (default 0)")
    p.add_argument("--verify", metavar="CHECKS", help=f"comma list from {','.join(CHECKS)}, or 'all'")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lnd", parents=[common], help="certify every derivation in a ring file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_lnd)

    p = sub.add_parser("danielewski", parents=[common], help="analyse xy = p(z) for p with the given roots")
    p.add_argument("--roots", required=True, help="comma-separated roots of p, e.g. 1,2,3")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--program-out", metavar="PATH", help="also write the zigzag program file")
    p.set_defaults(func=cmd_danielewski)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = args.func(args)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                raise InputError(f"{args.out}: {exc.strerror}") from None
        else:
            sys.stdout.write(text)
        return code
    except (InputError, ZigzagError) as exc:
        print(f"zigzag: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
