"""
Constructive bijections between set partitions, run-sorted permutations,
and insertion-labelled permutations.

Two insertion bijections drive everything.  Both send a pair (a, p) with
p a permutation of [n-1] and a in {FRONT, 1, ..., n-1} to a permutation
of [n] by placing the new maximum n right after the letter a (or in front
of the word when a is FRONT):

- ``peak_insert`` tracks the plain peak-value set and needs nothing more
  than the placement itself;
- ``lex_peak_insert`` tracks the peak-value set *after run-sorting* and
  must occasionally rearrange p first (``swap_tail``, its inverse, or
  ``flip_tails``) so that the sorted peak set updates by the same clean
  five-case rule.

The case analysis for the second map, with k the letter following a in
``runsort(p)``:

1. a = FRONT                               -> sorted peaks unchanged
2. a is the last letter of runsort(p)      -> unchanged
3. a is a sorted peak value                -> a replaced by n
4. k is a sorted peak value                -> k replaced by n
5. otherwise                               -> n joins the sorted peaks

Case 4 splits on "peak admissibility" and case 5 on "slope
admissibility"; the non-admissible case-5 permutations fall into either
the swap image or one of five residual classes permuted by the
``flip_tails`` involution.

``build_peak_transport`` stitches the two insertions together level by
level into an explicit bijection of S_n that maps the peak-value set onto
the sorted peak-value set while preserving the set of run starts.
"""
from __future__ import annotations

import csv
from typing import Iterator, Sequence

from .perms import (
    CapExceeded,
    Word,
    is_permutation,
    is_runsorted,
    peak_values,
    runs_positions,
    runsort,
    run_starts,
    slope_set,
    spv,
)


class _Front:
    """Sentinel label for inserting the new maximum at the front."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "FRONT"


FRONT = _Front()

Anchor = int | _Front


def anchor_labels(n: int) -> list[Anchor]:
    """The n insertion labels for building S_n out of S_{n-1}."""
    return [FRONT, *range(1, n)]


# ---------------------------------------------------------------------------
# Set partitions <-> run-sorted permutations
# ---------------------------------------------------------------------------

SetPartition = tuple[tuple[int, ...], ...]


def canonical_partition(blocks: Sequence[Sequence[int]]) -> SetPartition:
    """Sort each block and then the blocks; reject non-partitions of [n]."""
    canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
    flat = [x for b in canon for x in b]
    if any(not b for b in canon) or sorted(flat) != list(range(1, len(flat) + 1)):
        raise ValueError("blocks must partition 1..n into non-empty pieces")
    return canon


def enumerate_set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n], in canonical form."""
    if n == 0:
        yield ()
        return

    def rec(i: int, blocks: list[list[int]]) -> Iterator[SetPartition]:
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    # blocks stay canonical automatically: each block is increasing and
    # blocks are ordered by their minima.
    yield from rec(1, [])


def parse_set_partition(text: str) -> SetPartition:
    """
    Parse "18|27|3|46|5" (single-digit shorthand, usable only when every
    element is below 10) or "1,8|2,7|3|4,6|5".  Any comma in the input
    switches the whole string to comma-separated mode.
    """
    text = text.strip()
    comma_mode = "," in text
    blocks = []
    for tok in text.split("|"):
        tok = tok.strip()
        if comma_mode:
            blocks.append([int(x) for x in tok.split(",")])
        else:
            blocks.append([int(c) for c in tok])
    return canonical_partition(blocks)


def format_set_partition(p: SetPartition) -> str:
    n = sum(len(b) for b in p)
    sep = "" if n <= 9 else ","
    return "|".join(sep.join(str(x) for x in b) for b in p)


def partition_to_runsorted(p: SetPartition) -> Word:
    """
    Rotate each block's minimum to the back, concatenate the blocks in
    canonical order, shift every letter up by one and stick a 1 in front.
    The image is exactly the set of run-sorted permutations starting at 1,
    with one run per multi-element block plus one for the leading 1.
    """
    if p != canonical_partition(p):
        raise ValueError("set partition must be canonical")
    word = [1]
    for b in p:
        word.extend(x + 1 for x in b[1:])
        word.append(b[0] + 1)
    out = tuple(word)
    if not is_runsorted(out):
        raise AssertionError("image failed to be run-sorted")
    return out


def runsorted_to_partition(sigma: Sequence[int]) -> SetPartition:
    """Inverse of :func:`partition_to_runsorted`."""
    sigma = tuple(sigma)
    if not (is_permutation(sigma) and is_runsorted(sigma) and sigma[0] == 1):
        raise ValueError("need a run-sorted permutation starting with 1")
    w = [v - 1 for v in sigma[1:]]
    n = len(w)
    taken = [False] * n
    blocks: list[tuple[int, ...]] = []
    for d in range(n - 1):
        if w[d] <= w[d + 1]:
            continue
        # the block ends with its minimum w[d+1]; its other members are the
        # increasing stretch just before it whose letters all exceed it
        b1 = w[d + 1]
        s = d
        while s - 1 >= 0 and w[s - 1] < w[s] and w[s - 1] > b1:
            s -= 1
        blocks.append(tuple(sorted(w[s : d + 2])))
        for j in range(s, d + 2):
            taken[j] = True
    blocks.extend((w[j],) for j in range(n) if not taken[j])
    out = canonical_partition(blocks)
    if partition_to_runsorted(out) != sigma:
        raise AssertionError(f"round trip failed for {sigma}")
    return out


def partition_descents(p: SetPartition) -> set[int]:
    """
    Descent set of ``partition_to_runsorted(p)`` read straight off the
    partition: the positions of the last letters of the blocks of size
    two or more, inside the plain block concatenation.
    """
    out = set()
    pos = 0
    for b in p:
        pos += len(b)
        if len(b) >= 2:
            out.add(pos)
    return out


# ---------------------------------------------------------------------------
# Insertion maps
# ---------------------------------------------------------------------------

def insert_after(a: Anchor, p: Sequence[int]) -> Word:
    """Insert n = len(p)+1 right after the letter a, or at the front."""
    p = tuple(p)
    n = len(p) + 1
    if isinstance(a, _Front):
        return (n,) + p
    i = p.index(a)
    return p[: i + 1] + (n,) + p[i + 1 :]


def peak_insert(a: Anchor, p: Sequence[int]) -> tuple[Word, int]:
    """
    Insert the new maximum after a and report which of the five cases
    applies for the plain peak-value update.
    """
    p = tuple(p)
    q = insert_after(a, p)
    if isinstance(a, _Front):
        return q, 1
    i = p.index(a)
    if i == len(p) - 1:
        return q, 2
    if a in peak_values(p):
        return q, 3
    if p[i + 1] in peak_values(p):
        return q, 4
    return q, 5


def peak_insert_inverse(q: Sequence[int]) -> tuple[Anchor, Word]:
    q = tuple(q)
    n = len(q)
    i = q.index(n)
    a: Anchor = FRONT if i == 0 else q[i - 1]
    return a, q[:i] + q[i + 1 :]


def _lex_runs(p: Word) -> list[tuple[Word, int, int]]:
    """(run word, start, stop) triples sorted lexicographically by word."""
    return sorted((p[s:e], s, e) for s, e in runs_positions(p))


def _successor(p: Word, a: int) -> int | None:
    i = p.index(a)
    return p[i + 1] if i + 1 < len(p) else None


def is_peak_admissible(p: Sequence[int], a: int) -> bool:
    """
    For a immediately preceding a sorted peak value k of p: does inserting
    the new maximum after a simply trade k for it in the sorted peak set?
    Characterised by the lexicographically largest run starting below k:
    admissible iff that run ends below k, or ends beyond the next run's
    start.
    """
    p = tuple(p)
    k = _successor(p, a)
    if k is None or k not in spv(p):
        raise ValueError("needs the letter after a to be a sorted peak value")
    rr = _lex_runs(p)
    starts = [w[0] for w, _, _ in rr]
    ends = [w[-1] for w, _, _ in rr]
    m = max(j for j in range(len(rr)) if starts[j] < k)
    if ends[m] < k:
        return True
    return m < len(rr) - 1 and ends[m] > starts[m + 1]


def peak_admissible_by_definition(p: Sequence[int], a: int) -> bool:
    """The defining condition itself, used as the oracle in verification."""
    p = tuple(p)
    k = _successor(p, a)
    n = len(p) + 1
    return spv(insert_after(a, p)) == (spv(p) - {k}) | {n}


def swap_tail(a: int, p: Sequence[int]) -> Word:
    """
    For a non-peak-admissible pair: split the lexicographically largest
    run straddling k (the letter after a) at value k, and reattach its
    upper part right after k.  Composing with ``insert_after`` then trades
    k for the new maximum in the sorted peak set.
    """
    p = tuple(p)
    i = p.index(a)
    k = p[i + 1] if i + 1 < len(p) else None
    if k is None or k not in spv(p):
        raise ValueError("swap_tail: letter after a must be a sorted peak value")
    if is_peak_admissible(p, a):
        raise ValueError("swap_tail: pair is peak admissible, nothing to fix")
    rr = _lex_runs(p)
    straddle = [(w, s, e) for w, s, e in rr if w[0] < k < w[-1]]
    word, s, e = max(straddle, key=lambda t: t[0][0])
    cut = s
    while p[cut] < k:
        cut += 1
    upper = list(p[cut:e])
    rest = list(p[:cut]) + list(p[e:])
    pos_k = rest.index(k)
    return tuple(rest[: pos_k + 1] + upper + rest[pos_k + 1 :])


def swap_tail_inverse(a: int, p: Sequence[int]) -> Word | None:
    """
    Recover the unique preimage under ``swap_tail`` with the same anchor,
    or None when p is not in the swap image for a.
    """
    p = tuple(p)
    i = p.index(a)
    if i + 1 >= len(p):
        return None
    k = p[i + 1]
    if k < a:
        return None
    rr = _lex_runs(p)
    a_run = next((w, s, e) for w, s, e in rr if s <= i < e)
    _, s, e = a_run
    if i + 2 >= e:
        return None  # nothing after k inside the run
    upper = list(p[i + 2 : e])
    below = [(w, s2, e2) for w, s2, e2 in rr if w[0] < k and (s2, e2) != (s, e)]
    if not below:
        return None
    g1 = max(below)
    if g1[0][-1] >= k:
        return None
    rest = list(p[: i + 2]) + list(p[e:])
    pos = rest.index(g1[0][-1])
    sigma = tuple(rest[: pos + 1] + upper + rest[pos + 1 :])
    try:
        if (
            sigma[sigma.index(a) + 1] == k
            and k in spv(sigma)
            and not is_peak_admissible(sigma, a)
            and swap_tail(a, sigma) == p
        ):
            return sigma
    except (IndexError, ValueError):
        return None
    return None


def in_swap_image(p: Sequence[int], a: int) -> bool:
    return swap_tail_inverse(a, tuple(p)) is not None


def is_slope_admissible(p: Sequence[int], a: int) -> bool:
    """
    For a in slope_set(p): does inserting the new maximum after a leave
    every sorted peak in place and just add the new letter?  Four
    sufficient-and-exhaustive structural cases on the runs of p.
    """
    p = tuple(p)
    if a not in slope_set(p):
        raise ValueError("a must lie in the slope set")
    rr = _lex_runs(p)
    i = p.index(a)
    aidx = next(j for j, (w, s, e) in enumerate(rr) if s <= i < e)
    word, s, e = rr[aidx]
    if i == e - 1:
        return True  # a ends its run
    if aidx == len(rr) - 1:
        return True  # a's run is lexicographically largest
    k = p[i + 1]
    top = word[-1]
    if k < rr[aidx + 1][0][0]:
        return True  # the next run starts above k
    starts = [w[0] for w, _, _ in rr]
    ends = [w[-1] for w, _, _ in rr]
    above = [j for j in range(len(rr)) if starts[j] > k]
    if not above:
        return False
    m1 = min(above)
    return top > starts[m1] and (ends[m1 - 1] < k) == (ends[m1 - 1] < starts[m1])


def slope_admissible_by_definition(p: Sequence[int], a: int) -> bool:
    p = tuple(p)
    n = len(p) + 1
    return spv(insert_after(a, p)) == spv(p) | {n}


def residual_class(p: Sequence[int], a: int) -> int:
    """
    Classify a case-5 pair that is neither slope admissible nor in the
    swap image into one of five residual classes (1..5), read off from
    the run straddling k with the largest start.  The classes are pairwise
    disjoint and ``flip_tails`` fixes class 1 setwise while exchanging
    2 <-> 3 and 4 <-> 5.
    """
    p = tuple(p)
    rr = _lex_runs(p)
    i = p.index(a)
    k = p[i + 1]
    aidx = next(j for j, (w, s, e) in enumerate(rr) if s <= i < e)
    top = rr[aidx][0][-1]
    starts = [w[0] for w, _, _ in rr]
    ends = [w[-1] for w, _, _ in rr]
    above = [j for j in range(len(rr)) if starts[j] > k]
    if not above:
        if ends[-1] > k and top > k:
            return 1
        raise ValueError("pair lies in the swap image, not a residual class")
    m1 = min(above)
    em, sm1 = ends[m1 - 1], starts[m1]
    if k < top < em < sm1:
        return 2
    if k < em < top < sm1:
        return 3
    if k < top < sm1 < em:
        return 4
    if k < em < sm1 < top:
        return 5
    raise ValueError("pair is slope admissible or in the swap image")


def residual_census(n: int, a: int) -> dict[int, list[Word]]:
    """
    All permutations of [n] falling in each residual class for the anchor
    a (relative to inserting n+1).
    """
    import itertools

    out: dict[int, list[Word]] = {1: [], 2: [], 3: [], 4: [], 5: []}
    for p in itertools.permutations(range(1, n + 1)):
        if a not in slope_set(p):
            continue
        if is_slope_admissible(p, a) or in_swap_image(p, a):
            continue
        out[residual_class(p, a)].append(p)
    return out


def _is_residual(p: Word, a: int) -> bool:
    """Full domain check for the residual classes."""
    try:
        return (
            a in slope_set(p)
            and not is_slope_admissible(p, a)
            and not in_swap_image(p, a)
        )
    except (ValueError, IndexError):
        return False


def residual_census_json(n: int, a: int, members: bool = False) -> dict:
    """Census of the residual classes as a JSON-ready report."""
    census = residual_census(n, a)
    out: dict = {
        "schema": 1,
        "n": n,
        "a": a,
        "sizes": [len(census[j]) for j in (1, 2, 3, 4, 5)],
    }
    if members:
        out["members"] = {
            str(j): [" ".join(map(str, p)) for p in sorted(census[j])] for j in census
        }
    return out


def flip_tails(a: int, p: Sequence[int]) -> Word:
    """
    Exchange two segments of p: the part of a's run above k together with
    the chain of runs after it starting above e_m, and the part of the
    straddling run above k together with the chain of runs after it
    starting above l.  An involution on the residual classes; composing
    with ``insert_after`` adds the new maximum to the sorted peak set.
    """
    p = tuple(p)
    if not _is_residual(p, a):
        raise ValueError(f"{a} is not a residual anchor for {p}")
    residual_class(p, a)  # classifies; also rejects any leftover edge case
    rr = _lex_runs(p)
    occ = runs_positions(p)
    i = p.index(a)
    k = p[i + 1]
    a_run = next((w, s, e) for w, s, e in rr if s <= i < e)
    straddle = [
        (w, s, e)
        for w, s, e in rr
        if w[0] < k < w[-1] and (s, e) != (a_run[1], a_run[2])
    ]
    gw, gs, ge = max(straddle, key=lambda t: t[0][0])
    em = gw[-1]
    top = a_run[0][-1]
    if top <= k:
        raise AssertionError("residual pair must have letters above k in a's run")

    def chain_end(run_stop: int, threshold: int) -> int:
        """Last position of the maximal chain of runs after run_stop whose
        first letters all exceed threshold."""
        j = next(jj for jj, (s, e) in enumerate(occ) if e == run_stop) + 1
        stop = run_stop
        while j < len(occ) and p[occ[j][0]] > threshold:
            stop = occ[j][1]
            j += 1
        return stop

    s1_start, s1_stop = i + 2, chain_end(a_run[2], em)
    cut = gs
    while p[cut] < k:
        cut += 1
    s2_start, s2_stop = cut, chain_end(ge, top)
    if not (s1_stop <= s2_start or s2_stop <= s1_start):
        raise AssertionError("flip segments overlap")
    seg1 = list(p[s1_start:s1_stop])
    seg2 = list(p[s2_start:s2_stop])
    out = list(p)
    if s1_start < s2_start:
        out = out[:s1_start] + seg2 + out[s1_stop:s2_start] + seg1 + out[s2_stop:]
    else:
        out = out[:s2_start] + seg1 + out[s2_stop:s1_start] + seg2 + out[s1_stop:]
    return tuple(out)


def lex_peak_insert(a: Anchor, p: Sequence[int]) -> tuple[Word, int]:
    """
    The sorted-peak analogue of ``peak_insert``: returns the image in
    S_{len(p)+1} together with its case label 1..5.
    """
    p = tuple(p)
    if isinstance(a, _Front):
        return insert_after(a, p), 1
    w = runsort(p)
    if a == w[-1]:
        return insert_after(a, p), 2
    if a in spv(p):
        return insert_after(a, p), 3
    k = w[w.index(a) + 1]
    if k in spv(p):
        if is_peak_admissible(p, a):
            return insert_after(a, p), 4
        return insert_after(a, swap_tail(a, p)), 4
    if is_slope_admissible(p, a):
        return insert_after(a, p), 5
    pre = swap_tail_inverse(a, p)
    if pre is not None:
        return insert_after(a, pre), 5
    return insert_after(a, flip_tails(a, p)), 5


def lex_peak_insert_inverse(q: Sequence[int]) -> tuple[Anchor, Word]:
    """
    Invert ``lex_peak_insert`` by reading the anchor off the left of the
    maximum and testing the (at most four) branch preimages.
    """
    q = tuple(q)
    n = len(q)
    i = q.index(n)
    a: Anchor = FRONT if i == 0 else q[i - 1]
    p0 = q[:i] + q[i + 1 :]
    if isinstance(a, _Front):
        return a, p0
    candidates: list[Word] = [p0]
    pre = swap_tail_inverse(a, p0)
    if pre is not None:
        candidates.append(pre)
    for rearrange in (swap_tail, flip_tails):
        try:
            candidates.append(rearrange(a, p0))
        except (ValueError, IndexError):
            pass
    hits = [p for p in candidates if lex_peak_insert(a, p)[0] == q]
    if len(hits) != 1:
        raise AssertionError(f"non-unique inversion for {q}: {hits}")
    return a, hits[0]


def run_start_case(kind: str, a: Anchor, p: Sequence[int]) -> tuple[int, set[int]]:
    """
    Case label and predicted run-start set of the image, for
    kind = "peaks" (plain insertion) or "sorted" (lex insertion).  The
    letter k in the rule is always the successor of a inside p itself:

    1 -> add n; 2, 3 -> unchanged; 4 -> add k; 5 -> add k iff a < k.
    """
    p = tuple(p)
    n = len(p) + 1
    rs = run_starts(p)
    if kind == "peaks":
        case = peak_insert(a, p)[1]
    elif kind == "sorted":
        case = lex_peak_insert(a, p)[1]
    else:
        raise ValueError("kind must be 'peaks' or 'sorted'")
    if case == 1:
        return case, rs | {n}
    if case in (2, 3):
        return case, set(rs)
    k = _successor(p, a)
    if case == 4:
        return case, rs | {k}
    if k is not None and a < k:
        return case, rs | {k}
    return case, set(rs)


# ---------------------------------------------------------------------------
# The peak-transport bijection
# ---------------------------------------------------------------------------

TRANSPORT_CAP = 9


def _pairing_key(kind: str, a: Anchor, p: Word) -> tuple:
    """
    Bucket key for matching insertion labels across the two bijections.
    Cases 1 and 2 are singletons; cases 3 and 4 must agree on the peak
    value being traded; case 5 splits by whether a fresh run start k is
    created (and then on which k), mirroring ``run_start_case``.
    """
    if isinstance(a, _Front):
        return (1,)
    if kind == "peaks":
        i = p.index(a)
        if i == len(p) - 1:
            return (2,)
        k = p[i + 1]
        if a in peak_values(p):
            return (3, a)
        if k in peak_values(p):
            return (4, k)
    else:
        w = runsort(p)
        if a == w[-1]:
            return (2,)
        if a in spv(p):
            return (3, a)
        k = w[w.index(a) + 1]
        if k in spv(p):
            return (4, k)
        i = p.index(a)
        if i == len(p) - 1:
            return (5, "keep")
        k = p[i + 1]
    return (5, "new", k) if a < k else (5, "keep")


def build_peak_transport(n: int, max_n: int | None = None) -> dict[Word, Word]:
    """
    Explicit bijection of S_n sending the peak-value set of each
    permutation to the sorted peak-value set of its image while
    preserving the run-start set.  Built level by level: matched anchor
    pairs extend the level-(n-1) table through the two insertions.

    The matching inside each bucket is by increasing anchor, which makes
    the table deterministic; buckets of unequal size would mean the
    invariants are broken and raise immediately.
    """
    cap = TRANSPORT_CAP if max_n is None else max_n
    if n > cap:
        raise CapExceeded(
            f"peak transport table for S_{n} refused: cap is {cap} "
            "(pass max_n to override)"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    table: dict[Word, Word] = {(1,): (1,)}
    for m in range(2, n + 1):
        nxt: dict[Word, Word] = {}
        for sig, sig2 in table.items():
            left: dict[tuple, list[Anchor]] = {}
            right: dict[tuple, list[Anchor]] = {}
            for a in anchor_labels(m):
                left.setdefault(_pairing_key("peaks", a, sig), []).append(a)
                right.setdefault(_pairing_key("sorted", a, sig2), []).append(a)
            if set(left) != set(right) or any(
                len(left[key]) != len(right[key]) for key in left
            ):
                raise AssertionError(
                    f"internal invariant violation: anchor buckets differ "
                    f"for {sig} -> {sig2}: {left} vs {right}"
                )
            order = lambda x: -1 if isinstance(x, _Front) else x
            for key, lhs in left.items():
                for a, a2 in zip(sorted(lhs, key=order), sorted(right[key], key=order)):
                    nxt[peak_insert(a, sig)[0]] = lex_peak_insert(a2, sig2)[0]
        table = nxt
    return table


def transport_to_csv(table: dict[Word, Word], path: str) -> None:
    """Write the table as two comma-separated one-line words per row."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["sigma", "image"])
        for sig in sorted(table):
            writer.writerow([
                " ".join(map(str, sig)),
                " ".join(map(str, table[sig])),
            ])
