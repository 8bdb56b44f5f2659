"""Idempotent states and the interval combinatorics that control the algebras.

An I-state is a k-element subset of {0,...,n}.  The relative weight vector
between two I-states determines U-exponents in products; the classification
of the lines 1..n into crossed lines, generating intervals, and edge
intervals determines the canonical basis and the tensor splitting of each
Hom-space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

__all__ = [
    "IState",
    "IntervalClassification",
    "FarPair",
    "enumerate_istates",
    "weight_vector",
    "abs_weight_vector",
    "subadditivity_defect",
    "is_far",
    "classify_intervals",
    "interval_monomial",
]


class FarPair(ValueError):
    """Raised when interval classification is requested for a far pair."""


@dataclass(frozen=True, order=True)
class IState:
    """A k-element subset of {0,...,n}, stored as a sorted tuple."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient width must be >= 0, got {self.n}")
        m = self.members
        if any(not 0 <= a <= self.n for a in m):
            raise ValueError(f"members {m} not within [0,{self.n}]")
        if any(m[i] >= m[i + 1] for i in range(len(m) - 1)):
            raise ValueError(f"members {m} not strictly increasing")

    @property
    def k(self) -> int:
        return len(self.members)

    def __contains__(self, coord: int) -> bool:
        return coord in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def replace(self, old: int, new: int) -> "IState":
        """The I-state with one coordinate moved (used for quiver edges)."""
        if old not in self.members or (new in self.members and new != old):
            raise ValueError(f"cannot move {old} to {new} in {self}")
        return IState(self.n, tuple(sorted(set(self.members) - {old} | {new})))

    def text(self) -> str:
        return "{" + ",".join(str(a) for a in self.members) + "}"

    @staticmethod
    def parse(s: str, n: int) -> "IState":
        s = s.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"I-state text must be brace-delimited, got {s!r}")
        body = s[1:-1].strip()
        members = tuple(int(p) for p in body.split(",")) if body else ()
        return IState(n, members)

    def __str__(self) -> str:
        return self.text()


def _check_compatible(x: IState, y: IState) -> None:
    if x.n != y.n or x.k != y.k:
        raise ValueError(f"incompatible I-states {x} (n={x.n}) and {y} (n={y.n})")


def enumerate_istates(n: int, k: int) -> list[IState]:
    """All C(n+1,k) I-states in lexicographic order."""
    if n < 0:
        raise ValueError(f"width out of range: {n}")
    if not 0 <= k <= n + 1:
        raise ValueError(f"size out of range: k={k} for n={n}")
    return [IState(n, c) for c in combinations(range(n + 1), k)]


@lru_cache(maxsize=None)
def weight_vector(x: IState, y: IState) -> tuple[int, ...]:
    """Entry i (1-based) is |y cap [i,n]| - |x cap [i,n]|."""
    _check_compatible(x, y)
    n = x.n
    out = []
    for i in range(1, n + 1):
        out.append(sum(1 for a in y.members if a >= i) - sum(1 for a in x.members if a >= i))
    return tuple(out)


def abs_weight_vector(x: IState, y: IState) -> tuple[int, ...]:
    return tuple(abs(v) for v in weight_vector(x, y))


def subadditivity_defect(x: IState, y: IState, z: IState, i: int) -> int:
    """|v|_i(y,z) - |v|_i(x,z) + |v|_i(x,y); always a nonnegative even integer."""
    if not 1 <= i <= x.n:
        raise ValueError(f"line index {i} out of range for n={x.n}")
    d = (
        abs_weight_vector(y, z)[i - 1]
        - abs_weight_vector(x, z)[i - 1]
        + abs_weight_vector(x, y)[i - 1]
    )
    assert d >= 0 and d % 2 == 0, (x, y, z, i, d)
    return d


def is_far(x: IState, y: IState) -> bool:
    """True iff some coordinate pair has |x_a - y_a| > 1."""
    _check_compatible(x, y)
    return any(abs(a - b) > 1 for a, b in zip(x.members, y.members))


@dataclass(frozen=True)
class IntervalClassification:
    """Partition of the lines [1,n] for a not-far pair of I-states.

    generating intervals carry the monomials p_G that cut out the canonical
    basis; edge intervals contribute free polynomial factors.  Intervals are
    stored as inclusive (lo, hi) line ranges.
    """

    n: int
    crossed: frozenset[int]
    generating: tuple[tuple[int, int], ...]
    left_edge: Optional[tuple[int, int]]
    right_edge: Optional[tuple[int, int]]
    two_faced: Optional[tuple[int, int]]

    def lines_of(self, interval: tuple[int, int]) -> range:
        return range(interval[0], interval[1] + 1)


def interval_monomial(G: tuple[int, int]) -> tuple[int, ...]:
    """The squarefree monomial on the lines of G, as a sorted line tuple."""
    return tuple(range(G[0], G[1] + 1))


@lru_cache(maxsize=None)
def classify_intervals(x: IState, y: IState) -> IntervalClassification:
    """Sort every line 1..n into exactly one of: crossed line, generating
    interval, left/right/two-faced edge interval.

    Far pairs are an error rather than an empty result: downstream the far
    case is a separate zero case, not an interval-free one.
    """
    if is_far(x, y):
        raise FarPair(f"{x}, {y} are far")
    n = x.n
    v = weight_vector(x, y)
    crossed = frozenset(i for i in range(1, n + 1) if v[i - 1] != 0)
    fully_used = x.as_set() & y.as_set()
    not_fully = [t for t in range(n + 1) if t not in fully_used]

    generating: list[tuple[int, int]] = []
    left_edge: Optional[tuple[int, int]] = None
    right_edge: Optional[tuple[int, int]] = None
    two_faced: Optional[tuple[int, int]] = None
    seen: set[int] = set()
    for i in range(1, n + 1):
        if i in crossed or i in seen:
            continue
        below = [t for t in not_fully if t <= i - 1]
        above = [t for t in not_fully if t >= i]
        if below and above:
            lo, hi = below[-1] + 1, above[0]
            generating.append((lo, hi))
            seen.update(range(lo, hi + 1))
        elif above:
            left_edge = (1, above[0])
            seen.update(range(1, above[0] + 1))
        elif below:
            right_edge = (below[-1] + 1, n)
            seen.update(range(below[-1] + 1, n + 1))
        else:
            # every coordinate of [0,n] fully used: x = y = [0,n]
            two_faced = (1, n)
            seen.update(range(1, n + 1))

    cls = IntervalClassification(
        n=n,
        crossed=crossed,
        generating=tuple(sorted(generating)),
        left_edge=left_edge,
        right_edge=right_edge,
        two_faced=two_faced,
    )
    _check_partition(cls)
    return cls


def _check_partition(cls: IntervalClassification) -> None:
    covered: list[int] = list(cls.crossed)
    for g in cls.generating:
        covered.extend(cls.lines_of(g))
    for e in (cls.left_edge, cls.right_edge, cls.two_faced):
        if e is not None:
            covered.extend(cls.lines_of(e))
    assert sorted(covered) == list(range(1, cls.n + 1)), cls
