"""Torus and Levi-Borel complexity of Schubert and Richardson varieties.

The governing formulas, all exact and type-uniform:

* Richardson variety R_{u,v}:  c_T = l(v) - l(u) - ad(u, v), and
  ad(u, v) = max l(v) - l(w) over w in [u, v] with [w, v] toric.
* Schubert variety X_w:        c_T = l(w) - supp(w).
* Levi-Borel action on X_w (requires I contained in the left descent set of
  w): with the left parabolic decomposition w = a d, a in W_I,
  c_{L_I} = l(d) - supp(d).
* Partial flag variety G/P_J, w minimal in its coset: the stabilizer of the
  Schubert variety is the standard parabolic on D_L(w w_0(J)); torus
  complexity is unchanged from the full flag, and the Levi formula transfers
  exactly when L_I also acts on the full-flag Schubert variety.

Every report carries the witnessing data its value is computed from, so
callers (and the CLI) can print derivations rather than bare numbers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .algdim import ad, max_toric_below_top
from .bruhat import bruhat_le
from .errors import (FormulaUnavailableError, GroupTooLargeError,
                     InvalidInputError, PreconditionError)
from .rootsys import RootSystem, weyl_group_order
from .weyl import (DEFAULT_GROUP_CAP, SimpleSubset, WeylElement,
                   canonical_order, enumerate_group, left_descents,
                   left_parabolic_decomposition, longest_element, multiply,
                   right_descents, support, word_string)

SCAN_TARGETS = ("toric_schubert", "toric_richardson",
                "complexity_histogram", "levi_table")

#: Fixed column order per scan target (also the CSV header order).
SCAN_COLUMNS = {
    "toric_schubert": ("w", "length", "support"),
    "toric_richardson": ("u", "v", "rank", "ad"),
    "complexity_histogram": ("value", "count"),
    "levi_table": ("w", "I", "coset_factor", "value"),
}


@dataclass
class ComplexityReport:
    """A complexity value plus the ingredients it was computed from."""

    kind: str
    value: int
    witness: dict


def _subset_str(indices: Iterable[int]) -> str:
    return ",".join(map(str, sorted(indices)))


def torus_complexity_richardson(u: WeylElement,
                                v: WeylElement) -> ComplexityReport:
    """c_T of the Richardson variety for u <= v: l(v) - l(u) - ad(u, v)."""
    if not bruhat_le(u, v):
        raise PreconditionError(
            f"Richardson variety is empty: {word_string(u)} is not <= "
            f"{word_string(v)}")
    dim = ad(u, v)
    witness_w, witness_value = max_toric_below_top(u, v)
    return ComplexityReport(
        kind="torus_richardson",
        value=v.length - u.length - dim,
        witness={
            "u": word_string(u),
            "v": word_string(v),
            "length_u": u.length,
            "length_v": v.length,
            "ad": dim,
            "max_toric_witness": word_string(witness_w),
            "max_toric_value": witness_value,
        })


def torus_complexity_schubert(w: WeylElement) -> ComplexityReport:
    """c_T of the Schubert variety: l(w) - supp(w)."""
    supp_set = support(w)
    return ComplexityReport(
        kind="torus_schubert",
        value=w.length - len(supp_set),
        witness={
            "w": word_string(w),
            "length": w.length,
            "support": sorted(supp_set),
            "supp": len(supp_set),
        })


@dataclass
class LeviAction:
    """Whether L_I acts on X_w, with both equivalent combinatorial witnesses:
    I contained in the left descent set, and the left parabolic factor
    equal to w_0(I)."""

    acts: bool
    descent_containment: bool
    factor_equality: bool
    missing: tuple[int, ...]
    levi_factor: WeylElement
    longest_in_levi: WeylElement

    def __bool__(self) -> bool:
        return self.acts


def levi_acts(subset: Iterable[int], w: WeylElement) -> LeviAction:
    """Decide whether the Levi subgroup on the given simple indices acts on
    the Schubert variety of w, reporting both equivalent criteria."""
    sub = frozenset(subset)
    for i in sub:
        w.system._check_index(i)
    missing = tuple(sorted(sub - left_descents(w)))
    a, _ = left_parabolic_decomposition(w, sub)
    w0 = longest_element(w.system, sub)
    descent_ok = not missing
    factor_ok = a == w0
    return LeviAction(acts=descent_ok, descent_containment=descent_ok,
                      factor_equality=factor_ok, missing=missing,
                      levi_factor=a, longest_in_levi=w0)


def levi_borel_complexity(subset: Iterable[int],
                          w: WeylElement) -> ComplexityReport:
    """c_{L_I} of the Schubert variety of w, for I in the left descent set:
    with w = a d the left parabolic decomposition, the value is
    l(d) - supp(d)."""
    sub = frozenset(subset)
    action = levi_acts(sub, w)
    if not action.acts:
        raise PreconditionError(
            f"I is not contained in the left descent set of w "
            f"(offending indices: {{{_subset_str(action.missing)}}}); the "
            f"formula l(d) - supp(d) requires the Levi subgroup to act")
    a, d = left_parabolic_decomposition(w, sub)
    supp_d = support(d)
    return ComplexityReport(
        kind="levi_borel_schubert",
        value=d.length - len(supp_d),
        witness={
            "w": word_string(w),
            "I": sorted(sub),
            "left_descents": sorted(left_descents(w)),
            "levi_factor": word_string(a),
            "coset_factor": word_string(d),
            "length_d": d.length,
            "support_d": sorted(supp_d),
            "supp_d": len(supp_d),
        })


def _require_minimal(w: WeylElement, subset: frozenset[int]) -> None:
    bad = right_descents(w) & subset
    if bad:
        raise PreconditionError(
            f"w is not a minimal coset representative for J: right descents "
            f"{{{_subset_str(bad)}}} lie in J")


def partial_stabilizer_descents(w: WeylElement,
                                subset: Iterable[int]) -> SimpleSubset:
    """Simple indices of the standard parabolic stabilizing the Schubert
    variety of w in the partial flag variety on J: D_L(w w_0(J))."""
    sub = frozenset(subset)
    for i in sub:
        w.system._check_index(i)
    _require_minimal(w, sub)
    return left_descents(multiply(w, longest_element(w.system, sub)))


def partial_flag_torus_complexity(w: WeylElement,
                                  subset: Iterable[int]) -> ComplexityReport:
    """c_T of the Schubert variety of w in G/P_J equals its full-flag value
    l(w) - supp(w); requires w minimal in its coset."""
    sub = frozenset(subset)
    _require_minimal(w, sub)
    supp_set = support(w)
    return ComplexityReport(
        kind="torus_partial",
        value=w.length - len(supp_set),
        witness={
            "w": word_string(w),
            "J": sorted(sub),
            "length": w.length,
            "support": sorted(supp_set),
            "supp": len(supp_set),
            "toric": w.length == len(supp_set),
        })


def is_toric_partial(w: WeylElement, subset: Iterable[int]) -> bool:
    """Toric iff every generator appears at most once in any reduced word,
    i.e. l(w) = supp(w)."""
    sub = frozenset(subset)
    _require_minimal(w, sub)
    return w.length == len(support(w))


def partial_flag_levi_complexity(w: WeylElement, j_subset: Iterable[int],
                                 i_subset: Iterable[int]) -> ComplexityReport:
    """c_{L_I} of the Schubert variety of w in G/P_J.

    Hypotheses, each reported separately on failure: w minimal in its coset;
    I contained in D_L(w w_0(J)) (else L_I does not act at all); and I
    contained in D_L(w) (else L_I acts on the partial-flag variety only and
    no transferred value exists - a distinct FormulaUnavailableError).
    """
    j_sub = frozenset(j_subset)
    i_sub = frozenset(i_subset)
    stab = partial_stabilizer_descents(w, j_sub)
    outside = i_sub - stab
    if outside:
        raise PreconditionError(
            f"L_I does not act on the partial-flag Schubert variety: indices "
            f"{{{_subset_str(outside)}}} are not in D_L(w w_0(J)) = "
            f"{{{_subset_str(stab)}}}")
    not_full = i_sub - left_descents(w)
    if not_full:
        raise FormulaUnavailableError(
            f"L_I acts on the partial-flag Schubert variety but not on the "
            f"full-flag one (indices {{{_subset_str(not_full)}}} are not "
            f"left descents of w); the complexity does not transfer and no "
            f"value is available")
    base = levi_borel_complexity(i_sub, w)
    witness = dict(base.witness)
    witness["J"] = sorted(j_sub)
    witness["stabilizer_descents"] = sorted(stab)
    return ComplexityReport(kind="levi_partial", value=base.value,
                            witness=witness)


# -- batch scans ----------------------------------------------------------


def _subsets_sorted(indices: frozenset[int]) -> list[tuple[int, ...]]:
    base = sorted(indices)
    out = [()]
    for i in base:
        out += [s + (i,) for s in out]
    return sorted(out, key=lambda s: (len(s), s))


def _scan_unit(target: str, w: WeylElement,
               elements: tuple[WeylElement, ...]) -> list[dict]:
    if target == "toric_schubert":
        supp_set = support(w)
        if w.length == len(supp_set):
            return [{"w": word_string(w), "length": w.length,
                     "support": _subset_str(supp_set)}]
        return []
    if target == "toric_richardson":
        rows = []
        for v in elements:
            if w.length <= v.length and bruhat_le(w, v):
                rank = v.length - w.length
                dim = ad(w, v)
                if dim == rank:
                    rows.append({"u": word_string(w), "v": word_string(v),
                                 "rank": rank, "ad": dim})
        return rows
    if target == "complexity_histogram":
        return [{"value": w.length - len(support(w))}]
    if target == "levi_table":
        rows = []
        for sub in _subsets_sorted(left_descents(w)):
            _, d = left_parabolic_decomposition(w, sub)
            rows.append({"w": word_string(w), "I": _subset_str(sub),
                         "coset_factor": word_string(d),
                         "value": d.length - len(support(d))})
        return rows
    raise InvalidInputError(
        f"unknown scan target {target!r}; expected one of {SCAN_TARGETS}")


def scan(rs: RootSystem, target: str, *, max_length: int | None = None,
         jobs: int = 1, cap: int = DEFAULT_GROUP_CAP) -> Iterator[dict]:
    """Stream scan rows over the whole Weyl group, in canonical order
    (length, then least reduced word lexicographically).

    The output is deterministic and independent of ``jobs``; workers share
    only immutable state and rows are merged in canonical order.  Bad
    targets and over-cap groups are rejected eagerly, before any row is
    produced.
    """
    if target not in SCAN_TARGETS:
        raise InvalidInputError(
            f"unknown scan target {target!r}; expected one of {SCAN_TARGETS}")
    order = weyl_group_order(rs.datum.family, rs.rank)
    if order > cap:
        raise GroupTooLargeError(
            f"|W({rs.datum.family}{rs.rank})| = {order} exceeds the "
            f"enumeration cap {cap}", order, cap)
    elements = tuple(canonical_order(enumerate_group(rs, cap)))
    if max_length is not None:
        elements = tuple(w for w in elements if w.length <= max_length)
    return _scan_rows(target, elements, jobs)


def _scan_rows(target: str, elements: tuple[WeylElement, ...],
               jobs: int) -> Iterator[dict]:
    def unit(w: WeylElement) -> list[dict]:
        return _scan_unit(target, w, elements)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = pool.map(unit, elements)
            rows = [row for batch in batches for row in batch]
    else:
        rows = [row for w in elements for row in unit(w)]

    if target == "complexity_histogram":
        counts: dict[int, int] = {}
        for row in rows:
            counts[row["value"]] = counts.get(row["value"], 0) + 1
        for value in sorted(counts):
            yield {"value": value, "count": counts[value]}
        return
    yield from rows
