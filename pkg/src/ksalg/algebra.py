"""Canonical-basis arithmetic for the Kauffman-states dg algebras.

Five flavors share one data model:

  b0      -- complete-graph algebra over F2[U_1..U_n]: every ordered pair of
             I-states carries a free rank-one module, no far vanishing.
  b       -- the quotient with far vanishing and the generating-interval
             monomials p_G killed (canonical basis of monomials not divisible
             by any p_G).
  br/bl   -- corner truncations excluding I-states containing 0 (resp. n).
  bprime  -- both truncations at once.

Elements are F2-sums of BasisElements (left/right I-state, U-exponent
vector, squarefree C-subset of S).  Reduction to canonical form is eager.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .istates import (
    FarPair,
    IState,
    classify_intervals,
    enumerate_istates,
    is_far,
    weight_vector,
    abs_weight_vector,
    subadditivity_defect,
)

__all__ = [
    "Flavor",
    "AlgebraContext",
    "BasisElement",
    "Element",
    "GradingVector",
    "gen_f",
    "gen_sum",
    "multiply",
    "differential",
    "grading",
    "graded_piece_basis",
    "graded_pieces_up_to",
]


class Flavor(enum.Enum):
    B0 = "b0"
    B = "b"
    BR = "br"
    BL = "bl"
    BPRIME = "bprime"


@dataclass(frozen=True)
class AlgebraContext:
    """Width n, I-state size k, orientation set S, and flavor."""

    n: int
    k: int
    S: frozenset[int]
    flavor: Flavor

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n + 1:
            raise ValueError(f"k={self.k} out of range for n={self.n}")
        if not all(1 <= i <= self.n for i in self.S):
            raise ValueError(f"S={set(self.S)} not a subset of [1,{self.n}]")
        if self.flavor is Flavor.B0 and self.S:
            raise ValueError("flavor b0 carries no C-variables; S must be empty")

    @staticmethod
    def make(n: int, k: int, S: Iterable[int] = (), flavor: "Flavor | str" = Flavor.B) -> "AlgebraContext":
        if isinstance(flavor, str):
            flavor = Flavor(flavor)
        return AlgebraContext(n, k, frozenset(S), flavor)

    def is_admissible(self, x: IState) -> bool:
        if x.n != self.n or x.k != self.k:
            return False
        if self.flavor in (Flavor.BR, Flavor.BPRIME) and 0 in x:
            return False
        if self.flavor in (Flavor.BL, Flavor.BPRIME) and self.n in x:
            return False
        return True

    def istates(self) -> list[IState]:
        return [x for x in enumerate_istates(self.n, self.k) if self.is_admissible(x)]

    def check_admissible(self, x: IState) -> None:
        if not self.is_admissible(x):
            raise ValueError(f"I-state {x} not admissible for {self}")

    def __str__(self) -> str:
        s = ",".join(str(i) for i in sorted(self.S))
        return f"{self.flavor.value}(n={self.n},k={self.k},S={{{s}}})"


@dataclass(frozen=True, order=True)
class BasisElement:
    """One canonical additive generator C_{c}*U^{u}*f_{left,right}."""

    left: IState
    right: IState
    u_exp: tuple[int, ...]
    c_set: frozenset[int]

    def sort_key(self) -> tuple:
        return (self.left.members, self.right.members, self.u_exp, tuple(sorted(self.c_set)))


def _reduce_term(
    ctx: AlgebraContext,
    left: IState,
    right: IState,
    u_exp: tuple[int, ...],
    c_set: frozenset[int],
) -> Optional[BasisElement]:
    """Canonical form of one term, or None if it is zero in the flavor."""
    if any(r < 0 for r in u_exp):
        raise ValueError(f"negative U-exponent in {u_exp}")
    if not c_set <= ctx.S:
        raise ValueError(f"C-subset {set(c_set)} not within S={set(ctx.S)}")
    if ctx.flavor is Flavor.B0:
        return BasisElement(left, right, u_exp, c_set)
    if is_far(left, right):
        return None
    cls = classify_intervals(left, right)
    # generating intervals are disjoint, so "divisible by some p_G" is a
    # per-interval min-exponent check
    for lo, hi in cls.generating:
        if all(u_exp[i - 1] >= 1 for i in range(lo, hi + 1)):
            return None
    return BasisElement(left, right, u_exp, c_set)


class Element:
    """A finite F2-sum of BasisElements in one context; zero = empty set."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Iterable[BasisElement] = ()):
        self.ctx = ctx
        self.terms = frozenset(terms)

    @staticmethod
    def zero(ctx: AlgebraContext) -> "Element":
        return Element(ctx)

    @staticmethod
    def from_term(
        ctx: AlgebraContext,
        left: IState,
        right: IState,
        u_exp: Iterable[int] = (),
        c_set: Iterable[int] = (),
    ) -> "Element":
        ctx.check_admissible(left)
        ctx.check_admissible(right)
        u = tuple(u_exp) if u_exp else (0,) * ctx.n
        if len(u) != ctx.n:
            raise ValueError(f"U-exponent vector {u} has wrong length for n={ctx.n}")
        t = _reduce_term(ctx, left, right, u, frozenset(c_set))
        return Element(ctx, [t] if t is not None else [])

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[BasisElement]:
        return sorted(self.terms, key=BasisElement.sort_key)

    def single_term(self) -> BasisElement:
        if len(self.terms) != 1:
            raise ValueError(f"expected a single term, got {len(self.terms)}")
        return next(iter(self.terms))

    def __add__(self, other: "Element") -> "Element":
        self._check_ctx(other)
        return Element(self.ctx, self.terms ^ other.terms)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Element)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.terms))

    def _check_ctx(self, other: "Element") -> None:
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __repr__(self) -> str:
        from .textforms import element_text

        return f"Element({self.ctx}, {element_text(self)})"


def gen_f(ctx: AlgebraContext, x: IState, y: IState) -> Element:
    """The pure generator f_{x,y} (idempotent I_x when x = y), reduced."""
    return Element.from_term(ctx, x, y)


def idempotent(ctx: AlgebraContext, x: IState) -> Element:
    return gen_f(ctx, x, x)


def unit(ctx: AlgebraContext) -> Element:
    """The two-sided unit: the sum of all idempotents."""
    out = Element.zero(ctx)
    for x in ctx.istates():
        out = out + idempotent(ctx, x)
    return out


def gen_sum(ctx: AlgebraContext, kind: str, i: int) -> Element:
    """The global generator R_i, L_i, U_i, or C_i summed over admissible states."""
    if not 1 <= i <= ctx.n:
        raise ValueError(f"line index {i} out of range for n={ctx.n}")
    if kind == "C" and i not in ctx.S:
        raise ValueError(f"C_{i} requires {i} in S={set(ctx.S)}")
    out = Element.zero(ctx)
    for x in ctx.istates():
        if kind == "R":
            if i - 1 in x and i not in x:
                y = x.replace(i - 1, i)
                if ctx.is_admissible(y):
                    out = out + gen_f(ctx, x, y)
        elif kind == "L":
            if i in x and i - 1 not in x:
                y = x.replace(i, i - 1)
                if ctx.is_admissible(y):
                    out = out + gen_f(ctx, x, y)
        elif kind == "U":
            u = [0] * ctx.n
            u[i - 1] = 1
            out = out + Element.from_term(ctx, x, x, tuple(u))
        elif kind == "C":
            out = out + Element.from_term(ctx, x, x, c_set=[i])
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    return out


def _multiply_terms(ctx: AlgebraContext, a: BasisElement, b: BasisElement) -> Optional[BasisElement]:
    if a.right != b.left:
        return None
    if a.c_set & b.c_set:
        return None  # C_i^2 = 0
    x, y, z = a.left, a.right, b.right
    u = tuple(
        a.u_exp[i] + b.u_exp[i] + subadditivity_defect(x, y, z, i + 1) // 2
        for i in range(ctx.n)
    )
    return _reduce_term(ctx, x, z, u, a.c_set | b.c_set)


def multiply(a: Element, b: Element) -> Element:
    a._check_ctx(b)
    acc: set[BasisElement] = set()
    for ta in a.terms:
        for tb in b.terms:
            t = _multiply_terms(a.ctx, ta, tb)
            if t is not None:
                acc ^= {t}
    return Element(a.ctx, acc)


def differential(a: Element) -> Element:
    """The F2-linear differential: each C_j becomes a U_j, Leibniz-style."""
    acc: set[BasisElement] = set()
    for t in a.terms:
        for j in t.c_set:
            u = list(t.u_exp)
            u[j - 1] += 1
            r = _reduce_term(a.ctx, t.left, t.right, tuple(u), t.c_set - {j})
            if r is not None:
                acc ^= {r}
    return Element(a.ctx, acc)


@dataclass(frozen=True)
class GradingVector:
    """All four gradings of a homogeneous basis element.

    Alexander degrees are half-integers; they are stored doubled (alex2,
    alex_single2) so the arithmetic stays in integers.
    """

    maslov: int
    alex2: tuple[int, ...]
    unrefined: tuple[int, ...]  # (tau_1, beta_1, ..., tau_n, beta_n)
    alex_single2: int


def grading(ctx: AlgebraContext, a: BasisElement) -> GradingVector:
    n = ctx.n
    v = weight_vector(a.left, a.right)
    absv = tuple(abs(t) for t in v)
    alex2 = tuple(
        2 * a.u_exp[i] + absv[i] + (2 if (i + 1) in a.c_set else 0) for i in range(n)
    )
    maslov = len(a.c_set) - sum(alex2[i - 1] for i in ctx.S)
    # line i is crossed rightward by rho_i = (|v|_i + v_i)/2 coordinates and
    # leftward by lambda_i = (|v|_i - v_i)/2; each U/C loop adds tau_i + beta_i
    unrefined: list[int] = []
    for i in range(n):
        rho = (absv[i] + v[i]) // 2
        lam = (absv[i] - v[i]) // 2
        loops = a.u_exp[i] + (1 if (i + 1) in a.c_set else 0)
        unrefined.append(rho + loops)
        unrefined.append(lam + loops)
    alex_single2 = sum(-alex2[i - 1] if i in ctx.S else alex2[i - 1] for i in range(1, n + 1))
    return GradingVector(maslov, alex2, tuple(unrefined), alex_single2)


def maslov_of(ctx: AlgebraContext, a: BasisElement) -> int:
    return len(a.c_set) - sum(
        2 * a.u_exp[i - 1] + abs_weight_vector(a.left, a.right)[i - 1] + (2 if i in a.c_set else 0)
        for i in ctx.S
    )


def graded_piece_basis(
    ctx: AlgebraContext, x: IState, y: IState, alex2: tuple[int, ...]
) -> list[BasisElement]:
    """All canonical basis elements from x to y with the given doubled
    Alexander multidegree, in deterministic order.  Empty for far pairs."""
    ctx.check_admissible(x)
    ctx.check_admissible(y)
    if len(alex2) != ctx.n or any(d < 0 for d in alex2):
        raise ValueError(f"bad multidegree {alex2}")
    if ctx.flavor is not Flavor.B0 and is_far(x, y):
        return []
    absv = abs_weight_vector(x, y)
    out: list[BasisElement] = []
    for c_set in _subsets_sorted(ctx.S):
        u = []
        ok = True
        for i in range(1, ctx.n + 1):
            num = alex2[i - 1] - absv[i - 1] - (2 if i in c_set else 0)
            if num < 0 or num % 2 != 0:
                ok = False
                break
            u.append(num // 2)
        if not ok:
            continue
        t = _reduce_term(ctx, x, y, tuple(u), c_set)
        if t is not None:
            out.append(t)
    return out


def _subsets_sorted(S: frozenset[int]) -> list[frozenset[int]]:
    items = sorted(S)
    out = [frozenset()]
    for i in items:
        out = out + [s | {i} for s in out]
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


def graded_pieces_up_to(
    ctx: AlgebraContext, x: IState, y: IState, cap: int
) -> dict[tuple[int, ...], list[BasisElement]]:
    """All nonempty graded pieces from x to y with total alex2 <= cap."""
    ctx.check_admissible(x)
    ctx.check_admissible(y)
    out: dict[tuple[int, ...], list[BasisElement]] = {}
    if ctx.flavor is not Flavor.B0 and is_far(x, y):
        return out
    absv = abs_weight_vector(x, y)
    base = sum(absv)
    for c_set in _subsets_sorted(ctx.S):
        floor = base + 2 * len(c_set)
        if floor > cap:
            continue
        budget = (cap - floor) // 2
        for u in _bounded_vectors(ctx.n, budget):
            t = _reduce_term(ctx, x, y, u, c_set)
            if t is None:
                continue
            alex2 = tuple(
                2 * u[i] + absv[i] + (2 if (i + 1) in c_set else 0) for i in range(ctx.n)
            )
            out.setdefault(alex2, []).append(t)
    for terms in out.values():
        terms.sort(key=BasisElement.sort_key)
    return out


@lru_cache(maxsize=None)
def _bounded_vectors(n: int, total: int) -> tuple[tuple[int, ...], ...]:
    """All length-n vectors of nonnegative integers with sum <= total."""
    if n == 0:
        return ((),)
    out = []
    for head in range(total + 1):
        for tail in _bounded_vectors(n - 1, total - head):
            out.append((head,) + tail)
    return tuple(out)
