"""Canonical text forms for elements and paths.

Element grammar (whitespace-free, bit-exact):
    term  = ["C{i}*" ...] ["U{i}^{r}*" ...] "f[{x},{y}]"
    elem  = term ("+" term)* | "0"
Terms are printed sorted lexicographically.  Example:
    "C2*U1^2*f[{0,2},{1,2}]"

Path grammar: "{0}:R1,R2" (start state, colon, comma-joined edge labels).
"""

from __future__ import annotations

import re

from .algebra import AlgebraContext, BasisElement, Element
from .istates import IState

__all__ = ["element_text", "parse_element", "term_text", "path_text", "parse_path"]

_TERM_RE = re.compile(
    r"^(?P<pre>(?:[CU]\d+(?:\^\d+)?\*)*)f\[(?P<x>\{[\d,]*\}),(?P<y>\{[\d,]*\})\]$"
)
_FACT_RE = re.compile(r"([CU])(\d+)(?:\^(\d+))?")


def term_text(t: BasisElement) -> str:
    parts = [f"C{i}" for i in sorted(t.c_set)]
    parts += [f"U{i + 1}^{r}" for i, r in enumerate(t.u_exp) if r > 0]
    parts.append(f"f[{t.left.text()},{t.right.text()}]")
    return "*".join(parts)


def element_text(a: Element) -> str:
    if a.is_zero():
        return "0"
    return "+".join(sorted(term_text(t) for t in a.terms))


def parse_element(ctx: AlgebraContext, s: str) -> Element:
    s = s.strip().replace(" ", "")
    if s == "0":
        return Element.zero(ctx)
    out = Element.zero(ctx)
    pos = 0
    for chunk in s.split("+"):
        m = _TERM_RE.match(chunk)
        if m is None:
            raise ValueError(f"cannot parse element term at position {pos}: {chunk!r}")
        x = IState.parse(m.group("x"), ctx.n)
        y = IState.parse(m.group("y"), ctx.n)
        u = [0] * ctx.n
        c: set[int] = set()
        for kind, idx, exp in _FACT_RE.findall(m.group("pre")):
            i = int(idx)
            if not 1 <= i <= ctx.n:
                raise ValueError(f"line index {i} out of range at position {pos}")
            if kind == "U":
                u[i - 1] += int(exp) if exp else 1
            else:
                if exp:
                    raise ValueError(f"C factors carry no exponent: {chunk!r}")
                if i in c:
                    raise ValueError(f"repeated C{i} in {chunk!r}")
                c.add(i)
        out = out + Element.from_term(ctx, x, y, tuple(u), c)
        pos += len(chunk) + 1
    return out


def path_text(p) -> str:
    labels = ",".join(f"{e.kind}{e.line}" for e in p.edges)
    return f"{p.start.text()}:{labels}"


def parse_path(ctx: AlgebraContext, s: str):
    from .quiver import EdgeLabel, Path

    s = s.strip().replace(" ", "")
    if ":" not in s:
        raise ValueError(f"path text needs a colon: {s!r}")
    start_s, _, labels_s = s.partition(":")
    start = IState.parse(start_s, ctx.n)
    edges = []
    if labels_s:
        for lab in labels_s.split(","):
            m = re.match(r"^([RLUC])(\d+)$", lab)
            if m is None:
                raise ValueError(f"bad edge label {lab!r}")
            edges.append(EdgeLabel(m.group(1), int(m.group(2))))
    return Path(start, tuple(edges))
