"""Text formats: blow-up programs, ring/derivation files and polynomials.

Program files::

    # comments run to end of line
    base hirzebruch 1
    step1 on-d                 # or: free; omit for a k = 0 program
    blow between E1 E0         # meeting point of two adjacent chain curves
    blow free                  # free point of the rightmost chain curve
    final { G on E2; G on E0 }

Ring files::

    ring vars x, y, z, u       # optional trailing: order grevlex | lex
    ideal { x*y - (z^2 - 1)*z; z*u - (y^2 - 1)*y }
    derivation d1 { x -> 0; z -> x^2; y -> (3*z^2 - 1)*x; u -> ... }

Polynomials use integer or rational literals (``3/2``), declared variables,
``+ - * ^`` and parentheses.  Every error carries a 1-based line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boundary import (
    FREE,
    ON_D,
    Between,
    BlowupProgram,
    FarRightFree,
    ZigzagError,
    blow_up,
    blow_up_step1,
    final_step,
    init_hirzebruch,
)
from .lnd import Derivation, Ring
from .poly import ORDERS, Polynomial


class DslError(ValueError):
    def __init__(self, line: int, col: int, message: str, kind: str = "syntax-error"):
        self.line, self.col, self.kind = line, col, kind
        self.message = message
        super().__init__(f"{line}:{col}: {kind}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # word, int, op, eof
    text: str
    line: int
    col: int


_PROGRAM_WORD = r"[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z0-9_]+)*"
_RING_WORD = r"[A-Za-z_][A-Za-z0-9_]*"


def tokenize(text: str, hyphen_words: bool = False) -> list[Token]:
    word = _PROGRAM_WORD if hyphen_words else _RING_WORD
    spec = re.compile(
        rf"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)|(?P<word>{word})|(?P<int>\d+)"
        r"|(?P<op>->|[-+*^/(){};,])"
    )
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = spec.match(text, pos)
        if not m:
            raise DslError(line, pos - start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def fail(self, msg: str, tok: Token | None = None, kind: str = "syntax-error"):
        t = tok or self.tok
        raise DslError(t.line, t.col, msg, kind)

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text:
            found = t.text or "end of input"
            self.fail(f"expected {text!r}, found {found!r}")
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        t = self.tok
        if t.kind != kind:
            found = t.text or "end of input"
            self.fail(f"expected {what}, found {found!r}")
        return self.next()

    def accept(self, text: str) -> Token | None:
        if self.tok.text == text:
            return self.next()
        return None

    # polynomials ------------------------------------------------------

    def polynomial(self, vars: tuple[str, ...]) -> Polynomial:
        neg = bool(self.accept("-"))
        if not neg:
            self.accept("+")
        acc = self.term(vars)
        if neg:
            acc = -acc
        while self.tok.text in ("+", "-"):
            op = self.next().text
            t = self.term(vars)
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self, vars) -> Polynomial:
        acc = self.factor(vars)
        while self.tok.text == "*":
            self.next()
            acc = acc * self.factor(vars)
        return acc

    def factor(self, vars) -> Polynomial:
        if self.tok.text == "-":
            self.next()
            return -self.factor(vars)
        base = self.atom(vars)
        if self.tok.text == "^":
            self.next()
            e = self.expect_kind("int", "an integer exponent")
            return base ** int(e.text)
        return base

    def atom(self, vars) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.next()
            value = Fraction(int(t.text))
            if self.tok.text == "/":
                self.next()
                den = self.expect_kind("int", "an integer denominator")
                if int(den.text) == 0:
                    self.fail("zero denominator", den)
                value /= int(den.text)
            return Polynomial.constant(vars, value)
        if t.kind == "word":
            if t.text not in vars:
                self.fail(f"undeclared variable {t.text!r}", t, "unknown-variable")
            self.next()
            return Polynomial.var(vars, t.text)
        if t.text == "(":
            self.next()
            inner = self.polynomial(vars)
            self.expect(")")
            return inner
        self.fail(f"expected a polynomial term, found {t.text or 'end of input'!r}")


def parse_polynomial(text: str, vars: Sequence[str]) -> Polynomial:
    p = _Parser(tokenize(text))
    out = p.polynomial(tuple(vars))
    p.expect_kind("eof", "end of polynomial")
    return out


# ---------------------------------------------------------------------------
# programs


def parse_program(text: str) -> BlowupProgram:
    """Parse and replay-check a program; semantic errors point at the offending statement."""
    p = _Parser(tokenize(text, hyphen_words=True))
    p.expect("base")
    p.expect("hirzebruch")
    n_tok = p.tok
    sign = -1 if p.accept("-") else 1
    base_n = sign * int(p.expect_kind("int", "the Hirzebruch index").text)
    step1 = None
    if p.tok.text == "step1":
        p.next()
        c = p.expect_kind("word", "'on-d' or 'free'")
        if c.text not in (ON_D, FREE):
            p.fail(f"step1 choice must be 'on-d' or 'free', found {c.text!r}", c)
        step1 = c.text
    steps: list[tuple[Token, object]] = []
    while p.tok.text == "blow":
        bt = p.next()
        if p.accept("between"):
            a = p.expect_kind("word", "a component id")
            b = p.expect_kind("word", "a component id")
            steps.append((bt, Between(a.text, b.text)))
        elif p.accept("free"):
            steps.append((bt, FarRightFree()))
        else:
            p.fail("expected 'between' or 'free' after 'blow'")
    p.expect("final")
    brace = p.expect("{")
    hosts: list[tuple[Token, str]] = []
    while p.tok.text != "}":
        gt = p.expect("G")
        p.expect("on")
        h = p.expect_kind("word", "a component id")
        hosts.append((gt, h.text))
        if not p.accept(";"):
            break
    p.expect("}")
    p.expect_kind("eof", "end of program")
    if not hosts:
        raise DslError(brace.line, brace.col, "final block needs at least one attachment", "invalid-parameter")

    def semantic(tok: Token, exc: ZigzagError):
        raise DslError(tok.line, tok.col, str(exc), exc.kind) from exc

    try:
        g = init_hirzebruch(base_n, negative_section=True)
    except ZigzagError as exc:
        semantic(n_tok, exc)
    if step1 is not None:
        g = blow_up_step1(g, step1)
    for tok, loc in steps:
        if step1 is None:
            raise DslError(tok.line, tok.col, "blow steps need a step1 line first", "invalid-state")
        try:
            g = blow_up(g, loc)
        except ZigzagError as exc:
            semantic(tok, exc)
    for tok, h in hosts:
        try:
            final_step(g, [h])
        except ZigzagError as exc:
            semantic(tok, exc)
    return BlowupProgram(base_n, step1, tuple(loc for _, loc in steps), tuple(h for _, h in hosts))


def format_program(p: BlowupProgram) -> str:
    lines = [f"base hirzebruch {p.base_n}"]
    if p.step1 is not None:
        lines.append(f"step1 {p.step1}")
    for loc in p.interior:
        if isinstance(loc, Between):
            lines.append(f"blow between {loc.left} {loc.right}")
        else:
            lines.append("blow free")
    lines.append("final { " + "; ".join(f"G on {h}" for h in p.final) + " }")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# rings


@dataclass(eq=False)
class RingFile:
    ring: Ring
    derivations: list[Derivation]


def parse_ring(text: str) -> RingFile:
    p = _Parser(tokenize(text))
    p.expect("ring")
    p.expect("vars")
    names: list[str] = []
    while True:
        t = p.expect_kind("word", "a variable name")
        if t.text in names:
            p.fail(f"variable {t.text!r} declared twice", t)
        if t.text in ("order", "ideal", "derivation"):
            p.fail(f"{t.text!r} cannot be a variable name", t)
        names.append(t.text)
        if not p.accept(","):
            if p.tok.kind == "word" and p.tok.text not in ("order", "ideal", "derivation"):
                continue
            break
    order = "grevlex"
    if p.accept("order"):
        o = p.expect_kind("word", "a monomial order")
        if o.text not in ORDERS:
            p.fail(f"unknown order {o.text!r}; use one of {', '.join(ORDERS)}", o)
        order = o.text
    vars = tuple(names)
    relations: list[Polynomial] = []
    if p.accept("ideal"):
        p.expect("{")
        while p.tok.text != "}":
            relations.append(p.polynomial(vars))
            if not p.accept(";"):
                break
        p.expect("}")
    ring = Ring.of(vars, relations, order)
    derivations: list[Derivation] = []
    seen: set[str] = set()
    while p.accept("derivation"):
        nt = p.expect_kind("word", "a derivation name")
        if nt.text in seen:
            p.fail(f"derivation {nt.text!r} defined twice", nt)
        seen.add(nt.text)
        brace = p.expect("{")
        images: dict[str, Polynomial] = {}
        while p.tok.text != "}":
            vt = p.expect_kind("word", "a variable name")
            if vt.text not in vars:
                p.fail(f"undeclared variable {vt.text!r}", vt, "unknown-variable")
            if vt.text in images:
                p.fail(f"image of {vt.text!r} given twice", vt)
            p.expect("->")
            images[vt.text] = p.polynomial(vars)
            if not p.accept(";"):
                break
        p.expect("}")
        missing = [v for v in vars if v not in images]
        if missing:
            p.fail(f"derivation {nt.text!r} gives no image for {', '.join(missing)}", brace)
        derivations.append(Derivation(ring, images, nt.text))
    p.expect_kind("eof", "'derivation' or end of file")
    return RingFile(ring, derivations)


def format_ring(rf: RingFile) -> str:
    ring = rf.ring
    lines = [f"ring vars {', '.join(ring.vars)}"]
    if ring.relations.order != "grevlex":
        lines[0] += f" order {ring.relations.order}"
    if ring.relations.generators:
        lines.append("ideal {")
        lines.extend(f"  {g};" for g in ring.relations.generators)
        lines.append("}")
    for d in rf.derivations:
        lines.append(f"derivation {d.name} {{")
        lines.extend(f"  {v} -> {d.images[v]};" for v in ring.vars)
        lines.append("}")
    return "\n".join(lines) + "\n"
