"""Triple Massey products, non-formality certificates, quasi-isomorphism
checks for the formal cases, and the formality verdict tables.

A Massey argument is a homogeneous chain-level cycle (an Element whose
terms share both I-states, the multidegree, and the Maslov degree).  Only
length-3 products are implemented; longer admissible sequences depend on
choices the source theorems never pin down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import gf2
from .algebra import (
    AlgebraContext,
    BasisElement,
    Element,
    Flavor,
    differential,
    grading,
    multiply,
)
from .homology import (
    GradedComplex,
    build_graded_complex,
    complexes_up_to,
    homology_ranks,
    theorem_basis,
)
from .istates import IState, is_far
from .symmetry import rho, rho_ctx

__all__ = [
    "NoWitness",
    "MasseyResult",
    "homogeneous_data",
    "is_massey_admissible3",
    "massey3",
    "nonformal_certificate",
    "obstruction_clearance",
    "verify_quasi_iso",
    "FormalityVerdict",
    "formality_verdict",
    "formality_table",
    "single_grading_massey_data",
]


class NoWitness(RuntimeError):
    """A Massey linear system was inconsistent; flags an admissibility bug."""


def homogeneous_data(ctx: AlgebraContext, a: Element) -> tuple[IState, IState, tuple[int, ...], int]:
    """(left, right, alex2, maslov) of a homogeneous nonzero element."""
    if a.is_zero():
        raise ValueError("zero element carries no homogeneous data")
    data = None
    for t in a.terms:
        g = grading(ctx, t)
        d = (t.left, t.right, g.alex2, g.maslov)
        if data is None:
            data = d
        elif data != d:
            raise ValueError(f"element not homogeneous: {a!r}")
    return data


@lru_cache(maxsize=None)
def _piece(ctx: AlgebraContext, x: IState, y: IState, alex2: tuple[int, ...]) -> GradedComplex:
    return build_graded_complex(ctx, x, y, alex2)


@lru_cache(maxsize=None)
def _ranks(ctx: AlgebraContext, x: IState, y: IState, alex2: tuple[int, ...]) -> dict[int, int]:
    return homology_ranks(_piece(ctx, x, y, alex2))


def _h_rank(ctx: AlgebraContext, x: IState, y: IState, alex2: tuple[int, ...], m: int) -> int:
    return _ranks(ctx, x, y, alex2).get(m, 0)


@lru_cache(maxsize=None)
def _theorem_reps(
    ctx: AlgebraContext, x: IState, y: IState, alex2: tuple[int, ...]
) -> tuple[BasisElement, ...]:
    return tuple(theorem_basis(ctx, x, y, alex2))


def _is_boundary(ctx: AlgebraContext, a: Element, x: IState, y: IState, alex2: tuple[int, ...], m: int) -> bool:
    if a.is_zero():
        return True
    c = _piece(ctx, x, y, alex2)
    return c.class_vec(m, a) == 0


def _sum_vec(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(u, v))


def is_massey_admissible3(ctx: AlgebraContext, a1: Element, a2: Element, a3: Element) -> bool:
    """[a1 a2] = 0, [a2 a3] = 0, and the two Hom-homology pieces prescribed
    by admissibility vanish one Maslov degree above the products."""
    d1, d2, d3 = (homogeneous_data(ctx, a) for a in (a1, a2, a3))
    if d1[1] != d2[0] or d2[1] != d3[0]:
        raise ValueError("sequence not composable through shared idempotents")
    for da, db, prod in ((d1, d2, multiply(a1, a2)), (d2, d3, multiply(a2, a3))):
        alex2 = _sum_vec(da[2], db[2])
        m = da[3] + db[3]
        if not _is_boundary(ctx, prod, da[0], db[1], alex2, m):
            return False
        if _h_rank(ctx, da[0], db[1], alex2, m + 1) != 0:
            return False
    return True


@dataclass
class MasseyResult:
    """The reduced product class with its chain-level witnesses."""

    product_class: Element
    xi02: Element
    xi13: Element
    complex: GradedComplex
    maslov: int

    def is_zero(self) -> bool:
        return self.product_class.is_zero()


def _solve_witness(
    ctx: AlgebraContext,
    prod: Element,
    x: IState,
    y: IState,
    alex2: tuple[int, ...],
    m_prod: int,
    order: Optional[list[int]] = None,
) -> Element:
    """A chain xi with d(xi) = prod, one Maslov degree above the product."""
    c = _piece(ctx, x, y, alex2)
    if prod.is_zero():
        return Element.zero(ctx)
    target = c.to_vec(m_prod, prod)
    rows = c.d.get(m_prod + 1, [])
    idx = list(range(len(rows)))
    if order is not None:
        idx = order
    mask = gf2.solve_combination([rows[i] for i in idx], target)
    if mask is None:
        raise NoWitness(f"no witness for {prod!r} in piece {x},{y},{alex2}")
    basis = c.strata.get(m_prod + 1, [])
    return Element(ctx, [basis[idx[j]] for j in range(len(idx)) if (mask >> j) & 1])


def massey3(
    ctx: AlgebraContext,
    a1: Element,
    a2: Element,
    a3: Element,
    check: bool = True,
    shuffle_seed: Optional[int] = None,
) -> MasseyResult:
    """The triple product [xi02 a3 + a1 xi13], coset-reduced in its piece.

    With shuffle_seed set, the witness solves run over a permuted row order;
    admissibility makes the output class independent of that choice.
    """
    if check and not is_massey_admissible3(ctx, a1, a2, a3):
        raise ValueError("sequence is not Massey admissible")
    d1, d2, d3 = (homogeneous_data(ctx, a) for a in (a1, a2, a3))

    def order_for(nrows: int) -> Optional[list[int]]:
        if shuffle_seed is None:
            return None
        import random

        idx = list(range(nrows))
        random.Random(shuffle_seed).shuffle(idx)
        return idx

    a12, m12 = _sum_vec(d1[2], d2[2]), d1[3] + d2[3]
    c12 = _piece(ctx, d1[0], d2[1], a12)
    xi02 = _solve_witness(
        ctx, multiply(a1, a2), d1[0], d2[1], a12, m12, order_for(len(c12.d.get(m12 + 1, [])))
    )
    a23, m23 = _sum_vec(d2[2], d3[2]), d2[3] + d3[3]
    c23 = _piece(ctx, d2[0], d3[1], a23)
    xi13 = _solve_witness(
        ctx, multiply(a2, a3), d2[0], d3[1], a23, m23, order_for(len(c23.d.get(m23 + 1, [])))
    )
    out = multiply(xi02, a3) + multiply(a1, xi13)
    alex2 = _sum_vec(a12, d3[2])
    m_out = d1[3] + d2[3] + d3[3] + 1
    c = _piece(ctx, d1[0], d3[1], alex2)
    reduced = c.from_vec(m_out, c.class_vec(m_out, out)) if not out.is_zero() else out
    return MasseyResult(reduced, xi02, xi13, c, m_out)


# --- non-formality certificates ---------------------------------------------


def _forbidden(ctx: AlgebraContext) -> set[int]:
    out: set[int] = set()
    if ctx.flavor in (Flavor.BR, Flavor.BPRIME):
        out.add(0)
    if ctx.flavor in (Flavor.BL, Flavor.BPRIME):
        out.add(ctx.n)
    return out


def _isolated_state(ctx: AlgebraContext, i: int) -> Optional[IState]:
    """An admissible x with x cap [i-1, i+1] = {i}."""
    bad = _forbidden(ctx) | {i - 1, i, i + 1}
    pool = [t for t in range(0, ctx.n + 1) if t not in bad]
    if not (0 <= ctx.k - 1 <= len(pool)):
        return None
    x = IState(ctx.n, tuple(sorted([i] + pool[: ctx.k - 1])))
    return x if ctx.is_admissible(x) else None


def _family_sequence(ctx: AlgebraContext, family: str, i: int, x: IState) -> tuple[tuple[Element, Element, Element], Element]:
    """The four Massey families at a state x with x cap [i-1,i+1] = {i}."""
    from .algebra import gen_f

    x2 = x.replace(i, i - 1)
    x3 = x.replace(i, i + 1)
    u_next = [0] * ctx.n
    if family == "A":  # ([L_i],[R_i],[R_{i+1}]) -> [C_i R_{i+1}], needs i in S
        seq = (gen_f(ctx, x, x2), gen_f(ctx, x2, x), gen_f(ctx, x, x3))
        expected = Element.from_term(ctx, x, x3, c_set=[i])
    elif family == "B":  # ([R_{i+1}],[L_{i+1}],[L_i]) -> [C_{i+1} L_i], needs i+1 in S
        seq = (gen_f(ctx, x, x3), gen_f(ctx, x3, x), gen_f(ctx, x, x2))
        expected = Element.from_term(ctx, x, x2, c_set=[i + 1])
    elif family == "C":  # ([L_i],[R_i],[U_{i+1}]) -> [C_i U_{i+1}], S cap {i,i+1} = {i}
        u_next[i] = 1
        seq = (gen_f(ctx, x, x2), gen_f(ctx, x2, x), Element.from_term(ctx, x, x, tuple(u_next)))
        expected = Element.from_term(ctx, x, x, tuple(u_next), c_set=[i])
    elif family == "D":  # ([R_{i+1}],[L_{i+1}],[U_i]) -> [C_{i+1} U_i], S cap {i,i+1} = {i+1}
        u_next[i - 1] = 1
        seq = (gen_f(ctx, x, x3), gen_f(ctx, x3, x), Element.from_term(ctx, x, x, tuple(u_next)))
        expected = Element.from_term(ctx, x, x, tuple(u_next), c_set=[i + 1])
    else:
        raise ValueError(family)
    return seq, expected


def _corner_sequence(ctx: AlgebraContext, top: int, l: int) -> tuple[tuple[Element, Element, Element], Element]:
    """The corner-truncation sequence ([R_l...R_2], [L_2...L_l], [U_1]) with
    product class [U_1...U_{l-1} C_l], at the idempotents [1,top] minus one."""
    from .algebra import gen_f

    x_l = IState(ctx.n, tuple(t for t in range(1, top + 1) if t != l))
    x_1 = IState(ctx.n, tuple(t for t in range(1, top + 1) if t != 1))
    u1 = [0] * ctx.n
    u1[0] = 1
    seq = (gen_f(ctx, x_l, x_1), gen_f(ctx, x_1, x_l), Element.from_term(ctx, x_l, x_l, tuple(u1)))
    u_exp = [0] * ctx.n
    for j in range(1, l):
        u_exp[j - 1] = 1
    expected = Element.from_term(ctx, x_l, x_l, tuple(u_exp), c_set=[l])
    return seq, expected


def nonformal_certificate(ctx: AlgebraContext) -> Optional[dict]:
    """A concrete admissible sequence with nonzero triple product for a
    non-formal context, with its closed-form expected class."""
    n, k, S = ctx.n, ctx.k, ctx.S
    if ctx.flavor is Flavor.B:
        cands = [i for i in sorted(S) if i <= n - 1]
        if cands:
            i = cands[0]
            x = _isolated_state(ctx, i)
            if x is not None:
                seq, exp = _family_sequence(ctx, "A", i, x)
                return {"family": "A", "i": i, "sequence": seq, "expected": exp}
        if n in S:
            x = _isolated_state(ctx, n - 1)
            if x is not None:
                seq, exp = _family_sequence(ctx, "B", n - 1, x)
                return {"family": "B", "i": n - 1, "sequence": seq, "expected": exp}
        return None
    if ctx.flavor is Flavor.BR:
        if k == n - 1 and 1 not in S and S:
            l = min(S)
            seq, exp = _corner_sequence(ctx, n, l)
            return {"family": "corner", "i": l, "sequence": seq, "expected": exp}
        cands = [i for i in sorted(S) if 2 <= i <= n - 1]
        if cands:
            i = cands[0]
            x = _isolated_state(ctx, i)
            if x is not None:
                seq, exp = _family_sequence(ctx, "A", i, x)
                return {"family": "A", "i": i, "sequence": seq, "expected": exp}
        if n in S:
            x = _isolated_state(ctx, n - 1)
            if x is not None:
                seq, exp = _family_sequence(ctx, "B", n - 1, x)
                return {"family": "B", "i": n - 1, "sequence": seq, "expected": exp}
        return None
    if ctx.flavor is Flavor.BL:
        mirror = nonformal_certificate(rho_ctx(ctx))
        if mirror is None:
            return None
        seq = tuple(rho(a) for a in mirror["sequence"])
        return {
            "family": "rho-" + mirror["family"],
            "i": mirror["i"],
            "sequence": seq,
            "expected": rho(mirror["expected"]),
        }
    if ctx.flavor is Flavor.BPRIME:
        if k == n - 2:
            if 1 not in S and S:
                middle = [i for i in sorted(S) if 2 <= i <= n - 1]
                if middle:
                    seq, exp = _corner_sequence(ctx, n - 1, middle[0])
                    return {"family": "corner", "i": middle[0], "sequence": seq, "expected": exp}
                return None
            mirror = nonformal_certificate(rho_ctx(ctx))
            if mirror is None:
                return None
            seq = tuple(rho(a) for a in mirror["sequence"])
            return {
                "family": "rho-" + mirror["family"],
                "i": mirror["i"],
                "sequence": seq,
                "expected": rho(mirror["expected"]),
            }
        cands = [i for i in sorted(S) if 2 <= i <= n - 2]
        if cands:
            i = cands[0]
            x = _isolated_state(ctx, i)
            if x is not None:
                seq, exp = _family_sequence(ctx, "A", i, x)
                return {"family": "A", "i": i, "sequence": seq, "expected": exp}
        if n - 1 in S:
            x = _isolated_state(ctx, n - 2)
            if x is not None:
                seq, exp = _family_sequence(ctx, "B", n - 2, x)
                return {"family": "B", "i": n - 2, "sequence": seq, "expected": exp}
        return None
    return None


# --- formal-side certification ----------------------------------------------


def _single_edge_cycles(ctx: AlgebraContext) -> dict[IState, list[Element]]:
    """Cycles among single-edge elements, keyed by left I-state."""
    from .quiver import edges_from

    out: dict[IState, list[Element]] = {}
    for x in ctx.istates():
        elems = []
        for e, y in edges_from(ctx, x):
            if e.kind in ("R", "L"):
                a = Element.from_term(ctx, x, y)
            elif e.kind == "U":
                u = [0] * ctx.n
                u[e.line - 1] = 1
                a = Element.from_term(ctx, x, x, tuple(u))
            else:
                continue  # C loops are not cycles
            if not a.is_zero():
                elems.append(a)
        out[x] = elems
    return out


def obstruction_clearance(ctx: AlgebraContext, cap: int = 12) -> dict:
    """Every admissible length-3 sequence of single-edge homology classes
    has vanishing triple product (bounded-degree formality evidence)."""
    edges = _single_edge_cycles(ctx)
    failures: list[str] = []
    checked = 0
    for x, firsts in edges.items():
        for a1 in firsts:
            y = homogeneous_data(ctx, a1)[1]
            for a2 in edges.get(y, []):
                z = homogeneous_data(ctx, a2)[1]
                for a3 in edges.get(z, []):
                    d1, d2, d3 = (homogeneous_data(ctx, a) for a in (a1, a2, a3))
                    if sum(d1[2]) + sum(d2[2]) + sum(d3[2]) > cap:
                        continue
                    if not is_massey_admissible3(ctx, a1, a2, a3):
                        continue
                    checked += 1
                    res = massey3(ctx, a1, a2, a3, check=False)
                    if not res.is_zero():
                        from .textforms import element_text

                        failures.append(
                            f"nonzero product {element_text(res.product_class)} from "
                            f"{element_text(a1)}, {element_text(a2)}, {element_text(a3)}"
                        )
    return {"ctx": str(ctx), "ok": not failures, "admissible_checked": checked, "failures": failures}


def verify_quasi_iso(ctx: AlgebraContext, map_kind: str, cap: int = 12) -> dict:
    """Check an explicit formal-case map.

    "homology_quotient": the chain-level map killing every term with a
    C-variable induces a graded bijection onto homology.
    "section": the closed-form homology representatives form a multiplicative
    section (representative products are exactly representatives of the
    product classes), so homology embeds as a dg subalgebra with zero
    differential.
    """
    failures: list[str] = []
    states = ctx.istates()
    if map_kind == "homology_quotient":
        for x in states:
            for y in states:
                for alex2, c in complexes_up_to(ctx, x, y, cap).items():
                    for m, basis in c.strata.items():
                        vecs = []
                        for j, t in enumerate(basis):
                            if t.c_set:
                                continue
                            if c.d[m][j] != 0:
                                failures.append(f"C-free element not a cycle at {x},{y},{alex2}")
                                continue
                            vecs.append(c.class_vec(m, Element(ctx, [t])))
                        r = gf2.rank(vecs)
                        h = homology_ranks(c).get(m, 0)
                        if r != h:
                            failures.append(
                                f"rank mismatch at {x},{y},{alex2} maslov {m}: map rank {r}, homology {h}"
                            )
        return {"ctx": str(ctx), "kind": map_kind, "ok": not failures, "failures": failures[:20]}
    if map_kind != "section":
        raise ValueError(f"unknown map kind {map_kind!r}")

    reps: dict[tuple[IState, IState, tuple[int, ...]], list[BasisElement]] = {}
    for x in states:
        for y in states:
            for alex2 in complexes_up_to(ctx, x, y, cap):
                reps[(x, y, alex2)] = theorem_basis(ctx, x, y, alex2)
    # cycles and per-piece bijection with homology
    for (x, y, alex2), rs in reps.items():
        c = _piece(ctx, x, y, alex2)
        by_m: dict[int, list[int]] = {}
        for t in rs:
            m = grading(ctx, t).maslov
            if not differential(Element(ctx, [t])).is_zero():
                failures.append(f"representative not a cycle at {x},{y},{alex2}")
                continue
            by_m.setdefault(m, []).append(c.class_vec(m, Element(ctx, [t])))
        ranks = homology_ranks(c)
        for m in set(by_m) | set(ranks):
            vecs = by_m.get(m, [])
            if gf2.rank(vecs) != len(vecs) or len(vecs) != ranks.get(m, 0):
                failures.append(f"not a homology basis at {x},{y},{alex2} maslov {m}")
    # multiplicativity of the section
    flat = [(key, t) for key, rs in reps.items() for t in rs]
    for (xa, ya, aa), ta in flat:
        for (xb, yb, ab), tb in flat:
            if ya != xb or sum(aa) + sum(ab) > cap:
                continue
            prod = multiply(Element(ctx, [ta]), Element(ctx, [tb]))
            if is_far(xa, yb):
                if not prod.is_zero():
                    failures.append(f"nonzero product into far pair {xa},{yb}")
                continue
            alex2 = _sum_vec(aa, ab)
            m = grading(ctx, ta).maslov + grading(ctx, tb).maslov
            c = _piece(ctx, xa, yb, alex2)
            prod_reps = _theorem_reps(ctx, xa, yb, alex2)
            rvecs = [c.class_vec(m, Element(ctx, [t])) for t in prod_reps if grading(ctx, t).maslov == m]
            rterms = [t for t in prod_reps if grading(ctx, t).maslov == m]
            target = c.class_vec(m, prod) if not prod.is_zero() else 0
            mask = gf2.solve_combination(rvecs, target)
            if mask is None:
                failures.append(f"product class outside section image at {xa},{yb},{alex2}")
                continue
            image = Element(ctx, [rterms[j] for j in range(len(rterms)) if (mask >> j) & 1])
            if image != prod:
                failures.append(
                    f"section not multiplicative at {xa},{yb},{alex2}: "
                    f"rep product differs from product-class rep"
                )
    return {"ctx": str(ctx), "kind": map_kind, "ok": not failures, "failures": failures[:20]}


# --- verdict tables ----------------------------------------------------------


def _formal_by_table(ctx: AlgebraContext) -> bool:
    n, k, S = ctx.n, ctx.k, set(ctx.S)
    if not ctx.istates():
        return True  # the zero algebra
    if ctx.flavor in (Flavor.B0, Flavor.B):
        return not S or k in (0, n, n + 1)
    if ctx.flavor is Flavor.BR:
        return not S or S == {1} or k in (0, n) or (k == n - 1 and 1 in S)
    if ctx.flavor is Flavor.BL:
        return not S or S == {n} or k in (0, n) or (k == n - 1 and n in S)
    # bprime
    return (
        S in ({1}, {n}, {1, n}) or not S or k in (0, n - 1) or (k == n - 2 and {1, n} <= S)
    )


@dataclass
class FormalityVerdict:
    ctx: AlgebraContext
    formal: bool
    kind: str
    certificate: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        from .textforms import element_text

        payload = {}
        for key, val in self.certificate.items():
            if isinstance(val, Element):
                payload[key] = element_text(val)
            elif isinstance(val, tuple) and val and isinstance(val[0], Element):
                payload[key] = [element_text(a) for a in val]
            else:
                payload[key] = val
        return {
            "n": self.ctx.n,
            "k": self.ctx.k,
            "S": sorted(self.ctx.S),
            "flavor": self.ctx.flavor.value,
            "formal": self.formal,
            "kind": self.kind,
            "certificate": payload,
        }


def _formal_kind(ctx: AlgebraContext) -> str:
    n, k, S = ctx.n, ctx.k, set(ctx.S)
    if not ctx.istates():
        return "zero-algebra"
    if not S or k == 0:
        return "no-differential"
    if ctx.flavor in (Flavor.B0, Flavor.B):
        return "homology_quotient" if k == n else "section"
    if ctx.flavor is Flavor.BR:
        if k == n:
            return "homology_quotient"
        if S == {1}:
            return "section"
        return "obstruction-clearance"  # k = n-1 with 1 in S
    if ctx.flavor is Flavor.BL:
        if k == n:
            return "homology_quotient"
        if S == {n}:
            return "section"
        return "obstruction-clearance"
    # bprime
    if k == n - 1 or S <= {1, n}:
        return "section"
    return "obstruction-clearance"  # k = n-2 with {1,n} in S


def formality_verdict(ctx: AlgebraContext, certify: bool = False, cap: int = 12) -> FormalityVerdict:
    formal = _formal_by_table(ctx)
    if formal:
        kind = _formal_kind(ctx)
        cert: dict = {}
        if certify and kind in ("homology_quotient", "section"):
            cert = verify_quasi_iso(ctx, kind, cap)
        elif certify and kind == "obstruction-clearance":
            cert = obstruction_clearance(ctx, cap)
        if cert and not cert.get("ok", True):
            raise AssertionError(f"formal certificate failed for {ctx}: {cert['failures'][:3]}")
        return FormalityVerdict(ctx, True, kind, cert)
    cert = {}
    if certify:
        found = nonformal_certificate(ctx)
        if found is None:
            raise AssertionError(f"no certificate constructed for non-formal {ctx}")
        a1, a2, a3 = found["sequence"]
        if not is_massey_admissible3(ctx, a1, a2, a3):
            raise AssertionError(f"certificate sequence not admissible for {ctx}")
        res = massey3(ctx, a1, a2, a3, check=False)
        expected = found["expected"]
        exp_data = homogeneous_data(ctx, expected)
        exp_reduced = res.complex.from_vec(
            res.maslov, res.complex.class_vec(res.maslov, expected)
        )
        if res.is_zero() or res.product_class != exp_reduced or exp_reduced.is_zero():
            raise AssertionError(f"certificate mismatch for {ctx}")
        cert = {
            "family": found["family"],
            "i": found["i"],
            "sequence": found["sequence"],
            "product": res.product_class,
            "expected": expected,
        }
    return FormalityVerdict(ctx, False, "massey", cert)


def formality_table(n_max: int, certify_n_max: int = 0, cap: int = 12) -> list[FormalityVerdict]:
    """Verdicts for every context with n <= n_max, deterministic order."""
    out = []
    for n in range(1, n_max + 1):
        subsets = [frozenset()]
        for i in range(1, n + 1):
            subsets += [s | {i} for s in subsets]
        subsets.sort(key=lambda s: (len(s), tuple(sorted(s))))
        for flavor in (Flavor.B, Flavor.BR, Flavor.BL, Flavor.BPRIME):
            for k in range(0, n + 2):
                for S in subsets:
                    ctx = AlgebraContext(n, k, S, flavor)
                    out.append(formality_verdict(ctx, certify=n <= certify_n_max, cap=cap))
    return out


def single_grading_massey_data(ctx: AlgebraContext, cap: int = 12) -> Optional[dict]:
    """Data only, no verdict: for the standard certificate sequence, the
    homology ranks in the two admissibility windows when the multigrading is
    collapsed to the single Alexander grading.  Nonzero window ranks mean
    the multigraded admissibility argument does not descend."""
    found = nonformal_certificate(ctx)
    if found is None:
        return None
    a1, a2, a3 = found["sequence"]
    d1, d2, d3 = (homogeneous_data(ctx, a) for a in (a1, a2, a3))

    def single2(alex2: tuple[int, ...]) -> int:
        return sum(-alex2[i - 1] if i in ctx.S else alex2[i - 1] for i in range(1, ctx.n + 1))

    windows = []
    for da, db in ((d1, d2), (d2, d3)):
        x, y = da[0], db[1]
        target_single = single2(da[2]) + single2(db[2])
        m = da[3] + db[3] + 1
        total = 0
        for alex2, c in complexes_up_to(ctx, x, y, cap).items():
            if single2(alex2) == target_single:
                total += homology_ranks(c).get(m, 0)
        windows.append(
            {"x": x.text(), "y": y.text(), "single2": target_single, "maslov": m, "h_rank": total}
        )
    return {"ctx": str(ctx), "family": found["family"], "windows": windows}
