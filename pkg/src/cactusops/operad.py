"""Differential graded operad structure on surjections.

Composition v o_t u substitutes u into the t-th lobe of v: the entries of
u are split at r-1 weak breakpoints (r = number of occurrences of t in v)
and interleaved with the stretches of v between those occurrences, with
both sides relabelled so the result is again a surjection.  Every sign in
this module is produced by the Koszul rule: reordering two blocks of
degrees d1, d2 costs (-1)**(d1*d2), where a block's degree is a relative
degree (see ``surjections.relative_degree``).

The differential deletes one entry at a time; entries that are the only
occurrence of their value are skipped, and deletions that would leave two
equal adjacent entries are identified with zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence, Union

from .elements import Element, as_element
from .errors import LobeOutOfRangeError
from .reports import VerificationReport, equality_report
from .surjections import Surjection, insert_top_lobe, recurrence_prefix

__all__ = [
    "UNIT",
    "koszul_sign",
    "CompositionSplit",
    "composition_splits",
    "compose_basis",
    "compose",
    "boundary_basis",
    "boundary",
    "top_insertion_sum",
    "check_operad_axioms",
    "check_derivation",
]

UNIT = Surjection((1,))


def koszul_sign(degrees: Sequence[int], target_order: Sequence[int]) -> int:
    """Sign of reordering graded symbols into ``target_order``.

    ``degrees[s]`` is the degree of source symbol s; ``target_order`` lists
    source indices in their final order.  Each inverted pair of symbols of
    odd degrees contributes a factor -1.  Quadratic on purpose: the block
    count here is tiny and the fold is easy to audit.
    """
    sign = 1
    for a in range(len(target_order)):
        sa = target_order[a]
        if degrees[sa] % 2 == 0:
            continue
        for b in range(a + 1, len(target_order)):
            sb = target_order[b]
            if sa > sb and degrees[sb] % 2:
                sign = -sign
    return sign


@dataclass(frozen=True)
class CompositionSplit:
    """One summand of a composition v o_t u.

    ``breakpoints`` is the full weakly increasing tuple (j_0, ..., j_r)
    into u with j_0 = 1 and j_r = len(u); ``inner_blocks`` are the
    unrelabelled stretches u_1..u_r of u; ``outer_blocks`` the stretches
    v_0..v_r of v between occurrences of t.
    """

    t: int
    r: int
    breakpoints: tuple[int, ...]
    outer_blocks: tuple[tuple[int, ...], ...]
    inner_blocks: tuple[tuple[int, ...], ...]
    sign: int
    composite: Surjection


def composition_splits(v: Surjection, t: int, u: Surjection) -> Iterator[CompositionSplit]:
    """All breakpoint summands of v o_t u with their Koszul signs."""
    if not 1 <= t <= v.arity:
        raise LobeOutOfRangeError(f"lobe {t} not in 1..{v.arity}")
    vseq, useq = v.seq, u.seq
    n_inner = u.arity
    inner_len = len(useq)
    positions = [p + 1 for p, w in enumerate(vseq) if w == t]
    r = len(positions)

    vprefix = recurrence_prefix(vseq)
    uprefix = recurrence_prefix(useq)
    # Outer block degrees: windows from each occurrence of t to the next
    # (or to the end of v for the last block).
    outer_degrees = []
    for q in range(r):
        a = positions[q]
        b = positions[q + 1] if q + 1 < r else len(vseq)
        outer_degrees.append(vprefix[b - 1] - vprefix[a - 1])

    outer_blocks = []
    prev = 0
    for p in positions:
        outer_blocks.append(vseq[prev : p - 1])
        prev = p
    outer_blocks.append(vseq[prev:])

    def beta(s: int) -> int:
        return s if s < t else s + n_inner - 1

    relabelled_outer = [tuple(beta(s) for s in block) for block in outer_blocks]
    alpha_shift = t - 1
    target_order = []
    for p in range(r):
        target_order.extend((r + p, p))

    out_arity = v.arity + n_inner - 1
    out_degree = v.degree + u.degree

    for mids in combinations_with_replacement(range(1, inner_len + 1), r - 1):
        cuts = (1,) + mids + (inner_len,)
        inner_degrees = [uprefix[cuts[p + 1] - 1] - uprefix[cuts[p] - 1] for p in range(r)]
        inner_blocks = tuple(useq[cuts[p] - 1 : cuts[p + 1]] for p in range(r))

        composite: list[int] = list(relabelled_outer[0])
        for p in range(r):
            composite.extend(s + alpha_shift for s in inner_blocks[p])
            composite.extend(relabelled_outer[p + 1])
        if any(composite[i] == composite[i + 1] for i in range(len(composite) - 1)):
            continue  # degenerate composite counts as zero

        sign = koszul_sign(outer_degrees + inner_degrees, target_order)
        yield CompositionSplit(
            t=t,
            r=r,
            breakpoints=cuts,
            outer_blocks=tuple(outer_blocks),
            inner_blocks=inner_blocks,
            sign=sign,
            composite=Surjection._unchecked(tuple(composite), out_arity, out_degree),
        )


def compose_basis(v: Surjection, t: int, u: Surjection) -> Element:
    """Operadic composition of basis surjections, as an element."""
    acc: dict[Surjection, int] = {}
    for split in composition_splits(v, t, u):
        w = split.composite
        new = acc.get(w, 0) + split.sign
        if new:
            acc[w] = new
        elif w in acc:
            del acc[w]
    return Element(acc)


def compose(a: Union[Element, Surjection], t: int, b: Union[Element, Surjection]) -> Element:
    """Bilinear extension of basis composition.  Inputs must be homogeneous."""
    ea, eb = as_element(a), as_element(b)
    bideg_a = ea.bidegree()
    eb.bidegree()
    if bideg_a is None or not eb:
        return Element.zero()
    if not 1 <= t <= bideg_a[0]:
        raise LobeOutOfRangeError(f"lobe {t} not in 1..{bideg_a[0]}")
    acc: dict[Surjection, int] = {}
    for u1, c1 in ea.terms():
        for u2, c2 in eb.terms():
            coeff = c1 * c2
            for split in composition_splits(u1, t, u2):
                w = split.composite
                new = acc.get(w, 0) + coeff * split.sign
                if new:
                    acc[w] = new
                elif w in acc:
                    del acc[w]
    return Element(acc)


def boundary_basis(u: Surjection) -> Element:
    """Signed sum of single-entry deletions of u.

    A deletion is skipped when the entry is the only occurrence of its
    value and dropped when it would leave equal adjacent entries.  The
    sign exponent is the relative degree of the prefix up to the entry,
    or up to just past the penultimate occurrence when the entry is the
    last occurrence of its value.
    """
    seq = u.seq
    size = len(seq)
    counts: dict[int, int] = {}
    for s in seq:
        counts[s] = counts.get(s, 0) + 1
    prefix = recurrence_prefix(seq)
    prev_occurrence: dict[int, int] = {}
    acc: dict[Surjection, int] = {}
    for i in range(1, size + 1):
        v = seq[i - 1]
        prev = prev_occurrence.get(v)
        prev_occurrence[v] = i
        if counts[v] == 1:
            continue
        is_last = prefix[i] == prefix[i - 1]  # entry does not recur later
        if is_last:
            exponent = prefix[prev]  # relative degree of u(1..prev+1)
        else:
            exponent = prefix[i - 1]
        if 2 <= i <= size - 1 and seq[i - 2] == seq[i]:
            continue  # degenerate deletion counts as zero
        term = Surjection._unchecked(seq[: i - 1] + seq[i:], u.arity, u.degree - 1)
        sign = -1 if exponent % 2 else 1
        new = acc.get(term, 0) + sign
        if new:
            acc[term] = new
        elif term in acc:
            del acc[term]
    return Element(acc)


def boundary(a: Union[Element, Surjection]) -> Element:
    """Linear extension of the basis differential; drops degree by one."""
    ea = as_element(a)
    ea.bidegree()
    return ea.apply_linear(boundary_basis)


def top_insertion_sum(u: Surjection) -> Element:
    """Fast path for (1,2,1) o_1 u: sum over positions j of +/- u with the
    entry at j replaced by (u(j), n+1, u(j)), signed by the relative degree
    of the prefix u(1..j)."""
    prefix = recurrence_prefix(u.seq)
    acc: dict[Surjection, int] = {}
    for j in range(1, len(u.seq) + 1):
        sign = -1 if prefix[j - 1] % 2 else 1
        acc[insert_top_lobe(u, j)] = sign
    return Element(acc)


def check_operad_axioms(
    a: Surjection, i: int, b: Surjection, j: int, c: Surjection
) -> VerificationReport:
    """Check both partial-composition relations on (a o_i b) o_j c.

    Relation 1 applies when j < i (disjoint slots; the sides differ by the
    Koszul sign of swapping b and c).  Relation 2 applies when j falls
    inside the block of b.  Index pairs outside both ranges are reported
    as not applicable rather than guessed.
    """
    label = f"operad-axioms[a={a},i={i},b={b},j={j},c={c}]"
    if not 1 <= i <= a.arity:
        raise LobeOutOfRangeError(f"i={i} not in 1..{a.arity}")
    arity_ab = a.arity + b.arity - 1
    if not 1 <= j <= arity_ab:
        raise LobeOutOfRangeError(f"j={j} not in 1..{arity_ab}")

    ab = compose_basis(a, i, b)
    lhs = compose(ab, j, as_element(c))
    failures = {}
    notes = []

    if j < i:
        swap = -1 if (b.degree % 2) and (c.degree % 2) else 1
        rhs = swap * compose(compose_basis(a, j, c), i + c.arity - 1, as_element(b))
        if lhs != rhs:
            failures["relation1"] = {
                "lhs": str(lhs),
                "rhs": str(rhs),
                "difference": str(lhs - rhs),
            }
    else:
        notes.append("relation1: not applicable")

    if i <= j < b.arity + i:
        rhs = compose(as_element(a), i, compose_basis(b, j - i + 1, c))
        if lhs != rhs:
            failures["relation2"] = {
                "lhs": str(lhs),
                "rhs": str(rhs),
                "difference": str(lhs - rhs),
            }
    else:
        notes.append("relation2: not applicable")

    return VerificationReport(
        check=label,
        passed=not failures,
        witness=failures or None,
        notes=tuple(notes),
    )


def check_derivation(a: Surjection, i: int, b: Surjection) -> VerificationReport:
    """Check the Leibniz rule for the differential against o_i."""
    if not 1 <= i <= a.arity:
        raise LobeOutOfRangeError(f"i={i} not in 1..{a.arity}")
    lhs = boundary(compose_basis(a, i, b))
    sign = -1 if a.degree % 2 else 1
    rhs = compose(boundary_basis(a), i, as_element(b)) + sign * compose(
        as_element(a), i, boundary_basis(b)
    )
    return equality_report(f"derivation[a={a},i={i},b={b}]", lhs, rhs)
