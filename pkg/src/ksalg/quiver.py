"""Quiver presentations of the algebras and the canonical paths realizing
the inverse of normalization.

Vertices are the admissible I-states; edges are R_i / L_i moves of a single
coordinate across line i plus U_i loops everywhere and C_i loops for i in S.
`normalize` is the forward homomorphism from paths to canonical elements;
`canonical_path` is the recursive section sending f_{x,y} back to a path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import AlgebraContext, Element, Flavor, gen_f
from .istates import IState, weight_vector

__all__ = [
    "EdgeLabel",
    "Path",
    "edges_from",
    "path_counts",
    "normalize",
    "canonical_path",
    "relation_elements",
    "verify_presentation",
    "export_dot",
]

_KINDS = ("R", "L", "U", "C")


@dataclass(frozen=True, order=True)
class EdgeLabel:
    kind: str
    line: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown edge kind {self.kind!r}")
        if self.line < 1:
            raise ValueError(f"line index must be >= 1, got {self.line}")

    def __str__(self) -> str:
        return f"{self.kind}{self.line}"


def _step(ctx: AlgebraContext, x: IState, e: EdgeLabel) -> Optional[IState]:
    """Target of edge e out of x, or None if e is not traversable there."""
    if not 1 <= e.line <= ctx.n:
        return None
    if e.kind == "U":
        return x
    if e.kind == "C":
        return x if e.line in ctx.S else None
    if e.kind == "R":
        if e.line - 1 in x and e.line not in x:
            y = x.replace(e.line - 1, e.line)
            return y if ctx.is_admissible(y) else None
        return None
    # L: the mirror move
    if e.line in x and e.line - 1 not in x:
        y = x.replace(e.line, e.line - 1)
        return y if ctx.is_admissible(y) else None
    return None


@dataclass(frozen=True)
class Path:
    """A start I-state and a sequence of edge labels; the end state is
    derived by replay, never stored."""

    start: IState
    edges: tuple[EdgeLabel, ...]

    def vertices(self, ctx: AlgebraContext) -> list[IState]:
        """All visited states in order; raises on a non-traversable edge."""
        ctx.check_admissible(self.start)
        out = [self.start]
        for e in self.edges:
            nxt = _step(ctx, out[-1], e)
            if nxt is None:
                raise ValueError(f"edge {e} not traversable at {out[-1]} in {ctx}")
            out.append(nxt)
        return out

    def end(self, ctx: AlgebraContext) -> IState:
        return self.vertices(ctx)[-1]

    def concat(self, other: "Path", ctx: AlgebraContext) -> "Path":
        if self.end(ctx) != other.start:
            raise ValueError("paths not composable")
        return Path(self.start, self.edges + other.edges)

    def __str__(self) -> str:
        from .textforms import path_text

        return path_text(self)


def edges_from(ctx: AlgebraContext, x: IState) -> list[tuple[EdgeLabel, IState]]:
    """All out-edges of x with targets: moving edges by line, then U loops,
    then C loops."""
    ctx.check_admissible(x)
    out: list[tuple[EdgeLabel, IState]] = []
    for i in range(1, ctx.n + 1):
        for kind in ("L", "R"):
            e = EdgeLabel(kind, i)
            y = _step(ctx, x, e)
            if y is not None:
                out.append((e, y))
    for i in range(1, ctx.n + 1):
        out.append((EdgeLabel("U", i), x))
    for i in sorted(ctx.S):
        out.append((EdgeLabel("C", i), x))
    return out


def path_counts(ctx: AlgebraContext, p: Path) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(rho, lambda): per-line counts of R- and L-labeled edges."""
    p.vertices(ctx)  # validates
    rho = [0] * ctx.n
    lam = [0] * ctx.n
    for e in p.edges:
        if e.kind == "R":
            rho[e.line - 1] += 1
        elif e.kind == "L":
            lam[e.line - 1] += 1
    return tuple(rho), tuple(lam)


def normalize(ctx: AlgebraContext, p: Path) -> Element:
    """The image of p in the algebra: edge images multiplied left to right."""
    verts = p.vertices(ctx)
    out = gen_f(ctx, p.start, p.start)
    for e, cur, nxt in zip(p.edges, verts, verts[1:]):
        if e.kind in ("R", "L"):
            factor = gen_f(ctx, cur, nxt)
        elif e.kind == "U":
            u = [0] * ctx.n
            u[e.line - 1] = 1
            factor = Element.from_term(ctx, cur, cur, tuple(u))
        else:
            factor = Element.from_term(ctx, cur, cur, c_set=[e.line])
        out = out * factor
    return out


def canonical_path(ctx: AlgebraContext, x: IState, y: IState) -> Path:
    """The recursive path from x to y: while some coordinate must move right,
    move the maximal such coordinate all the way (an R-segment); then move
    left-moving coordinates in minimal-index order (L-segments).  All R-edges
    precede all L-edges."""
    ctx.check_admissible(x)
    ctx.check_admissible(y)
    edges: list[EdgeLabel] = []
    cur = list(x.members)
    tgt = list(y.members)
    while True:
        rights = [a for a in range(len(cur)) if cur[a] < tgt[a]]
        if not rights:
            break
        a = max(rights)
        edges.extend(EdgeLabel("R", i) for i in range(cur[a] + 1, tgt[a] + 1))
        cur[a] = tgt[a]
    while cur != tgt:
        a = min(a for a in range(len(cur)) if cur[a] > tgt[a])
        edges.extend(EdgeLabel("L", i) for i in range(cur[a], tgt[a], -1))
        cur[a] = tgt[a]
    return Path(x, tuple(edges))


def _loop_path(x: IState, kind: str, i: int) -> Path:
    return Path(x, (EdgeLabel(kind, i),))


def relation_elements(ctx: AlgebraContext, family: str) -> list[list[Path]]:
    """Every instance of every relation in the named family, each as a list
    of one or two paths whose normalizations must sum to zero.

    Families: "base" (U central, loop, distant commutation), "quotient"
    (adds two-line pass and U vanishing), "oriented" (adds C^2 and C
    central), "truncated" (adds the U_1...U_n loop word at the bprime
    corner idempotent when k = n-1).  Each family includes the previous.
    """
    if family not in ("base", "quotient", "oriented", "truncated"):
        raise ValueError(f"unknown relation family {family!r}")
    out: list[list[Path]] = []
    n = ctx.n
    movers = [("R", i) for i in range(1, n + 1)] + [("L", i) for i in range(1, n + 1)]
    loops = [("U", i) for i in range(1, n + 1)]
    if family in ("oriented", "truncated"):
        loops = loops + [("C", i) for i in sorted(ctx.S)]

    def word(x: IState, labels: list[tuple[str, int]]) -> Optional[Path]:
        edges = []
        cur = x
        for kind, i in labels:
            e = EdgeLabel(kind, i)
            nxt = _step(ctx, cur, e)
            if nxt is None:
                return None
            edges.append(e)
            cur = nxt
        return Path(x, tuple(edges))

    def add_pair(x: IState, w1: list[tuple[str, int]], w2: list[tuple[str, int]]) -> None:
        p1, p2 = word(x, w1), word(x, w2)
        rel = [p for p in (p1, p2) if p is not None]
        if rel:
            out.append(rel)

    for x in ctx.istates():
        # U central: U_j commutes with every mover and with every loop
        for kind, i in movers:
            for _, j in loops[:n]:
                add_pair(x, [(kind, i), ("U", j)], [("U", j), (kind, i)])
        for a in range(n):
            for b in range(a + 1, n):
                add_pair(x, [("U", a + 1), ("U", b + 1)], [("U", b + 1), ("U", a + 1)])
        # loop relations R_iL_i = U_i = L_iR_i
        for i in range(1, n + 1):
            if _step(ctx, x, EdgeLabel("R", i)) is not None:
                add_pair(x, [("R", i), ("L", i)], [("U", i)])
            if _step(ctx, x, EdgeLabel("L", i)) is not None:
                add_pair(x, [("L", i), ("R", i)], [("U", i)])
        # distant commutation, |i-j| > 1
        for k1, i in movers:
            for k2, j in movers:
                if abs(i - j) > 1 and (i < j or (i > j and k1 != k2)):
                    add_pair(x, [(k1, i), (k2, j)], [(k2, j), (k1, i)])
        if family != "base":
            # two-line pass: R_iR_{i+1} = 0 and L_{i+1}L_i = 0
            for i in range(1, n):
                p = word(x, [("R", i), ("R", i + 1)])
                if p is not None:
                    out.append([p])
                p = word(x, [("L", i + 1), ("L", i)])
                if p is not None:
                    out.append([p])
            # U vanishing: U_i = 0 at states not meeting {i-1, i}
            for i in range(1, n + 1):
                if i - 1 not in x and i not in x:
                    out.append([_loop_path(x, "U", i)])
        if family in ("oriented", "truncated"):
            for i in sorted(ctx.S):
                out.append([word(x, [("C", i), ("C", i)])])
                for kind, j in movers + loops:
                    if (kind, j) == ("C", i):
                        continue
                    add_pair(x, [("C", i), (kind, j)], [(kind, j), ("C", i)])
    if family == "truncated" and ctx.flavor is Flavor.BPRIME and ctx.k == n - 1 and n >= 1:
        corner = IState(n, tuple(range(1, n)))
        if ctx.is_admissible(corner):
            out.append([word(corner, [("U", i) for i in range(1, n + 1)])])
    return out


def default_family(ctx: AlgebraContext) -> str:
    if ctx.flavor is Flavor.B0:
        return "base"
    if ctx.flavor is Flavor.B:
        return "oriented" if ctx.S else "quotient"
    return "truncated"


def verify_presentation(ctx: AlgebraContext) -> dict:
    """Machine check that the quiver presents the algebra.

    (a) every relation of the flavor's family normalizes to zero;
    (b) normalize(canonical_path(x,y)) = f_{x,y} for all admissible pairs;
    (c) the canonical path of a moving edge's endpoints is that single edge;
    (d) concatenation of canonical paths normalizes to the product of the
        separate normalizations (a U-monomial times f of the endpoints).
    """
    failures: list[str] = []
    family = default_family(ctx)
    for rel in relation_elements(ctx, family):
        acc = normalize(ctx, rel[0])
        for p in rel[1:]:
            acc = acc + normalize(ctx, p)
        if not acc.is_zero():
            failures.append(f"relation {[str(p) for p in rel]} normalizes to {acc!r}")
    states = ctx.istates()
    for x in states:
        for y in states:
            g = canonical_path(ctx, x, y)
            if normalize(ctx, g) != gen_f(ctx, x, y):
                failures.append(f"canonical path {g} does not normalize to f_{x},{y}")
        for e, y in edges_from(ctx, x):
            if e.kind in ("R", "L") and canonical_path(ctx, x, y).edges != (e,):
                failures.append(f"canonical path of edge {e} at {x} is not that edge")
    for x in states:
        for y in states:
            for z in states:
                p = canonical_path(ctx, x, y).concat(canonical_path(ctx, y, z), ctx)
                if normalize(ctx, p) != normalize(ctx, canonical_path(ctx, x, y)) * normalize(
                    ctx, canonical_path(ctx, y, z)
                ):
                    failures.append(f"segment product failure at {x},{y},{z}")
    return {"ctx": str(ctx), "family": family, "ok": not failures, "failures": failures}


def export_dot(ctx: AlgebraContext) -> str:
    """Plain DOT digraph of the flavor's quiver, labels as edge attributes."""
    lines = ["digraph quiver {"]
    for x in ctx.istates():
        lines.append(f'  "{x.text()}";')
    for x in ctx.istates():
        for e, y in edges_from(ctx, x):
            lines.append(f'  "{x.text()}" -> "{y.text()}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines)
