"""The filtration by alternation length, cacti, and their lobe trees.

A surjection lies in filtration stage m when no two values alternate
(i,j,i,j,...) more than m+1 times as a scattered subsequence.  Stage 2 is
the suboperad of (spineless) cacti: configurations of labelled circles in
the plane whose boundary traversal, read anticlockwise from a root point,
spells out the sequence.  The cactus test used everywhere is a linear
stack scan over the nesting structure of consecutive-occurrence gaps; the
scattered-pattern definition is kept only to produce witnesses and as an
independent cross-check in the tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import NotACactusError, ResourceBoundError
from .surjections import Surjection, insert_top_lobe, recurrence_prefix

__all__ = [
    "length_cap",
    "max_pair_alternation",
    "filtration_level",
    "cactus_violation",
    "is_cactus",
    "LobeTree",
    "lobe_tree",
    "flatten_lobe_tree",
    "enumerate_basis",
    "prime_cacti",
    "prime_cacti_filtered",
    "prime_cacti_count",
    "avoids_prime_patterns",
]

DEFAULT_LENGTH_CAP = 14


def length_cap() -> int:
    """Sequence-length cap for enumerations, from CACTUS_MAX_LEN."""
    raw = os.environ.get("CACTUS_MAX_LEN")
    if raw is None:
        return DEFAULT_LENGTH_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ResourceBoundError(f"CACTUS_MAX_LEN={raw!r} is not an integer") from exc
    if cap < 1:
        raise ResourceBoundError(f"CACTUS_MAX_LEN={cap} must be positive")
    return cap


def max_pair_alternation(u: Surjection) -> int:
    """Length of the longest alternating scattered subsequence (i,j,i,...)."""
    if u.arity == 1:
        return 1
    best = 2  # some pair of distinct values is always adjacent
    seq = u.seq
    for x in range(1, u.arity + 1):
        for y in range(x + 1, u.arity + 1):
            blocks = 0
            last = 0
            for v in seq:
                if (v == x or v == y) and v != last:
                    blocks += 1
                    last = v
            if blocks > best:
                best = blocks
    return best


def filtration_level(u: Surjection) -> int:
    """Smallest filtration stage containing u; the unit sits in stage 1."""
    if u.arity == 1:
        return 1
    return max_pair_alternation(u) - 1


def cactus_violation(u: Surjection) -> Optional[tuple[tuple[int, int, int, int], tuple[int, int]]]:
    """Positions and values of an (i,j,i,j) pattern, or None for a cactus.

    Scans once, keeping a stack of values whose consecutive-occurrence gap
    is open; a value reappearing while it is not on top crosses the gap of
    whatever is.
    """
    seq = u.seq
    prefix = recurrence_prefix(seq)
    stack: list[tuple[int, int]] = []  # (value, position of gap start)
    last_seen: dict[int, int] = {}
    for p in range(1, len(seq) + 1):
        v = seq[p - 1]
        if v in last_seen:
            top_v, top_p = stack[-1]
            if top_v != v:
                later = next(q for q in range(p + 1, len(seq) + 1) if seq[q - 1] == top_v)
                return (last_seen[v], top_p, p, later), (v, top_v)
            stack.pop()
        if prefix[p] > prefix[p - 1]:  # value recurs later: gap opens
            stack.append((v, p))
        last_seen[v] = p
    return None


def is_cactus(u: Surjection) -> bool:
    """True when u has no scattered (i,j,i,j) alternation."""
    return cactus_violation(u) is None


@dataclass(frozen=True)
class LobeTree:
    """Rooted planar tree of lobes.

    ``slots`` has one entry per boundary arc of this lobe; entry g holds
    the subtrees attached at the intersection point closing arc g, in
    traversal order.  Flattening (arc label, then slot g subtrees, for
    each g) reproduces the original sequence.
    """

    label: int
    slots: tuple[tuple["LobeTree", ...], ...]

    @property
    def arcs(self) -> int:
        return len(self.slots)

    def children(self) -> list["LobeTree"]:
        return [child for slot in self.slots for child in slot]


class _TreeBuilder:
    __slots__ = ("label", "slots")

    def __init__(self, label: int):
        self.label = label
        self.slots: list[list["_TreeBuilder"]] = [[]]

    def freeze(self) -> LobeTree:
        return LobeTree(
            label=self.label,
            slots=tuple(tuple(c.freeze() for c in slot) for slot in self.slots),
        )


def lobe_tree(u: Surjection) -> LobeTree:
    """The planar lobe tree whose boundary traversal spells u.

    The root lobe is u(1); a lobe seen for the first time hangs off the
    lobe of the previous arc, at that lobe's current arc.
    """
    violation = cactus_violation(u)
    if violation is not None:
        positions, (i, j) = violation
        raise NotACactusError(
            f"{u} contains the pattern ({i},{j},{i},{j}) at positions {positions}",
            witness=positions,
        )
    seq = u.seq
    builders: dict[int, _TreeBuilder] = {}
    for p, v in enumerate(seq):
        if v in builders:
            builders[v].slots.append([])
        else:
            node = _TreeBuilder(v)
            builders[v] = node
            if p > 0:
                builders[seq[p - 1]].slots[-1].append(node)
    return builders[seq[0]].freeze()


def flatten_lobe_tree(tree: LobeTree) -> Surjection:
    """Anticlockwise boundary traversal of the tree."""
    out: list[int] = []

    def walk(node: LobeTree) -> None:
        for slot in node.slots:
            out.append(node.label)
            for child in slot:
                walk(child)

    walk(tree)
    return Surjection(out)


def enumerate_basis(
    n: int, k: int, level: Optional[int] = 2, max_len: Optional[int] = None
) -> list[Surjection]:
    """All arity-n, degree-k surjections within a filtration stage.

    ``level=None`` lifts the alternation bound and enumerates the full
    basis.  Backtracking over the sequence positions in lexicographic
    order, pruning on adjacent repeats, on pair-alternation exceeding
    level+1, and on surjectivity becoming unreachable.
    """
    if n < 1 or k < 0:
        return []
    cap = length_cap() if max_len is None else max_len
    size = n + k
    if size > cap:
        raise ResourceBoundError(f"length {size} exceeds cap {cap}")
    if level == 2 and k > n - 1:
        return []  # cacti on n lobes have at most 2n-1 arcs
    if n == 1:
        return [Surjection((1,))] if k == 0 else []

    limit = size + 1 if level is None else level + 1
    # Alternation state per value pair: the number of maximal blocks in the
    # restriction of the current prefix to the pair, and the block value it
    # currently ends with (0 while the restriction is empty).
    pair_last = [[0] * (n + 1) for _ in range(n + 1)]
    pair_blocks = [[0] * (n + 1) for _ in range(n + 1)]
    counts = [0] * (n + 1)
    used = 0
    seq: list[int] = []
    out: list[Surjection] = []

    def extend() -> None:
        nonlocal used
        depth = len(seq)
        if depth == size:
            if used == n:
                out.append(Surjection._unchecked(tuple(seq), n, k))
            return
        remaining = size - depth
        last = seq[-1] if seq else 0
        for c in range(1, n + 1):
            if c == last:
                continue
            missing = n - used - (0 if counts[c] else 1)
            if missing > remaining - 1:
                continue
            touched: list[tuple[int, int]] = []
            ok = True
            for x in range(1, n + 1):
                if x == c or pair_last[x][c] == c:
                    continue
                if pair_blocks[x][c] + 1 > limit:
                    ok = False
                    break
                touched.append((x, pair_last[x][c]))
            if ok:
                for x, _ in touched:
                    pair_blocks[x][c] += 1
                    pair_blocks[c][x] += 1
                    pair_last[x][c] = c
                    pair_last[c][x] = c
                if counts[c] == 0:
                    used += 1
                counts[c] += 1
                seq.append(c)
                extend()
                seq.pop()
                counts[c] -= 1
                if counts[c] == 0:
                    used -= 1
                for x, old in touched:
                    pair_blocks[x][c] -= 1
                    pair_blocks[c][x] -= 1
                    pair_last[x][c] = old
                    pair_last[c][x] = old

    extend()
    return out


def avoids_prime_patterns(u: Surjection) -> bool:
    """No scattered (i,j,i) with j < i or j = i + 1: every lobe sitting
    above lobe i carries a label at least i + 2."""
    seq = u.seq
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for p, v in enumerate(seq):
        first.setdefault(v, p)
        last[v] = p
    for v in range(1, u.arity + 1):
        for p in range(first[v] + 1, last[v]):
            w = seq[p]
            if w != v and (w < v or w == v + 1):
                return False
    return True


@lru_cache(maxsize=None)
def _prime_cacti_cached(n: int) -> tuple[Surjection, ...]:
    if n == 2:
        return (Surjection((1, 2)), Surjection((2, 1)))
    out = []
    for u in _prime_cacti_cached(n - 1):
        top = u.seq.index(u.arity) + 1  # unique occurrence of the top lobe
        for j in range(1, len(u.seq) + 1):
            if j != top:
                out.append(insert_top_lobe(u, j))
    return tuple(sorted(out, key=lambda s: s.seq))


def prime_cacti(n: int) -> list[Surjection]:
    """Top-degree cacti avoiding the prime patterns, built recursively.

    Each arity-n element arises exactly once from an arity-(n-1) element
    by inserting the new top lobe at any position other than the current
    top lobe; the list is sorted lexicographically.
    """
    if n < 2:
        raise ValueError(f"arity {n} has no prime cacti")
    if 2 * n - 2 > length_cap():
        raise ResourceBoundError(f"length {2 * n - 2} exceeds cap {length_cap()}")
    return list(_prime_cacti_cached(n))


def prime_cacti_filtered(n: int) -> list[Surjection]:
    """Independent route to the prime cacti: filter the full enumeration."""
    if n < 2:
        raise ValueError(f"arity {n} has no prime cacti")
    return [u for u in enumerate_basis(n, n - 2, 2) if avoids_prime_patterns(u)]


def prime_cacti_count(n: int) -> int:
    """Closed-form size 2*(2n-5)!! of the arity-n prime cacti."""
    if n < 2:
        raise ValueError(f"arity {n} has no prime cacti")
    if n == 2:
        return 2
    out = 2
    for odd in range(2 * n - 5, 0, -2):
        out *= odd
    return out
