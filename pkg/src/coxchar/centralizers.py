"""Centralizers of class representatives in hyperoctahedral groups.

The representative w_mu of the class labelled by a signed partition mu is
a product of disjoint signed cycles on consecutive blocks: negative cycles
c_1..c_a on the first |mu.neg| coordinates, then positive cycles d_1..d_b.
Its centralizer splits one cycle length at a time,

    C(w_mu)  =  prod_i (Z_2i)^a_i : S_a_i  x  prod_j (Z_j)^b_j : W_b_j,

with a_i negative and b_j positive cycles of length i and j: an element
permutes equal blocks, twists each block by a power of its cycle, and may
negate positive blocks outright.  The coordinates of an element in this
decomposition drive both linear-character evaluation and a direct streaming
enumeration of the centralizer that needs no group arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .partitions import SignedPartition
from .signedperm import SignedPermutation

__all__ = [
    "CentralizerGenSet",
    "CentralizerCoordinates",
    "w_mu",
    "centralizer_generators",
    "centralizer_order",
    "symmetric_centralizer_order",
    "coordinates",
    "reassemble",
    "centralizer_elements",
    "conjugate_by_first_flip",
]


# -- block layout ------------------------------------------------------------


def _runs(parts):
    """Group a monotone tuple into (value, count) runs."""
    runs = []
    for p in parts:
        if runs and runs[-1][0] == p:
            runs[-1][1] += 1
        else:
            runs.append([p, 1])
    return [(v, c) for v, c in runs]


@lru_cache(maxsize=None)
def _layout(mu: SignedPartition):
    """Per-length families of block offsets: (neg, pos) tuples of
    (length, offsets)."""
    neg, pos = [], []
    u = 0
    for length, count in _runs(mu.neg):
        offsets = tuple(u + k * length for k in range(count))
        neg.append((length, offsets))
        u += count * length
    for length, count in _runs(mu.pos):
        offsets = tuple(u + k * length for k in range(count))
        pos.append((length, offsets))
        u += count * length
    return tuple(neg), tuple(pos)


def _neg_orbit(offset, length):
    """Images of offset+1 under powers of the negative cycle on its block."""
    ups = list(range(offset + 1, offset + length + 1))
    return ups + [-v for v in ups]


# -- representatives and the displayed generators ------------------------------


def _fill_neg_cycle(images, offset, length):
    for v in range(offset + 1, offset + length):
        images[v - 1] = v + 1
    images[offset + length - 1] = -(offset + 1)


def _fill_pos_cycle(images, offset, length):
    for v in range(offset + 1, offset + length):
        images[v - 1] = v + 1
    images[offset + length - 1] = offset + 1


def w_mu(n: int, mu: SignedPartition) -> SignedPermutation:
    """The class representative c_1...c_a d_1...d_b for mu."""
    if mu.n != n:
        raise ValueError(f"{mu} is not a signed partition of {n}")
    images = list(range(1, n + 1))
    u = 0
    for length in mu.neg:
        _fill_neg_cycle(images, u, length)
        u += length
    for length in mu.pos:
        _fill_pos_cycle(images, u, length)
        u += length
    return SignedPermutation(tuple(images))


def _cycle_neg(n, offset, length):
    images = list(range(1, n + 1))
    _fill_neg_cycle(images, offset, length)
    return SignedPermutation(tuple(images))


def _cycle_pos(n, offset, length):
    images = list(range(1, n + 1))
    _fill_pos_cycle(images, offset, length)
    return SignedPermutation(tuple(images))


def _swap_blocks(n, offset, length):
    """Exchange the two adjacent blocks of the given length at offset."""
    images = list(range(1, n + 1))
    for v in range(offset + 1, offset + length + 1):
        images[v - 1] = v + length
        images[v + length - 1] = v
    return SignedPermutation(tuple(images))


def _negate_block(n, offset, length):
    images = list(range(1, n + 1))
    for v in range(offset + 1, offset + length + 1):
        images[v - 1] = -v
    return SignedPermutation(tuple(images))


@dataclass(frozen=True)
class CentralizerGenSet:
    """The named generators of C(w_mu) built from the block formulas.

    neg_swaps[i] (pos_swaps[j]) is present only where consecutive parts
    agree; keys are 1-based positions into mu.neg (mu.pos).
    """

    n: int
    mu: SignedPartition
    neg_cycles: tuple[SignedPermutation, ...]
    pos_cycles: tuple[SignedPermutation, ...]
    neg_swaps: tuple[tuple[int, SignedPermutation], ...]
    pos_swaps: tuple[tuple[int, SignedPermutation], ...]
    flips: tuple[SignedPermutation, ...]

    def all_generators(self):
        return (
            list(self.neg_cycles)
            + list(self.pos_cycles)
            + [g for _, g in self.neg_swaps]
            + [g for _, g in self.pos_swaps]
            + list(self.flips)
        )


def centralizer_generators(n: int, mu: SignedPartition) -> CentralizerGenSet:
    if mu.n != n:
        raise ValueError(f"{mu} is not a signed partition of {n}")
    m = sum(mu.neg)
    neg_cycles, pos_cycles, neg_swaps, pos_swaps, flips = [], [], [], [], []
    u = 0
    for i, length in enumerate(mu.neg, start=1):
        neg_cycles.append(_cycle_neg(n, u, length))
        if i < len(mu.neg) and mu.neg[i] == length:
            neg_swaps.append((i, _swap_blocks(n, u, length)))
        u += length
    u = m
    for j, length in enumerate(mu.pos, start=1):
        pos_cycles.append(_cycle_pos(n, u, length))
        if j < len(mu.pos) and mu.pos[j] == length:
            pos_swaps.append((j, _swap_blocks(n, u, length)))
        flips.append(_negate_block(n, u, length))
        u += length
    return CentralizerGenSet(
        n,
        mu,
        tuple(neg_cycles),
        tuple(pos_cycles),
        tuple(neg_swaps),
        tuple(pos_swaps),
        tuple(flips),
    )


def centralizer_order(mu: SignedPartition) -> int:
    """|C_{W_n}(w_mu)| = prod (2i)^a_i a_i!  prod (2j)^b_j b_j!."""
    order = 1
    for length, count in _runs(mu.neg):
        order *= (2 * length) ** count * factorial(count)
    for length, count in _runs(mu.pos):
        order *= (2 * length) ** count * factorial(count)
    return order


def symmetric_centralizer_order(mu: SignedPartition) -> int:
    """|C_{S_n}(w_mu)| for an all-positive mu."""
    if mu.neg:
        raise ValueError("symmetric centralizer needs an all-positive label")
    order = 1
    for length, count in _runs(mu.pos):
        order *= length**count * factorial(count)
    return order


# -- coordinates --------------------------------------------------------------


@dataclass(frozen=True)
class CentralizerCoordinates:
    """Coordinates of a centralizer element in the block decomposition.

    neg entries: (length, perm, exps) with perm the induced permutation of
    the equal-length blocks and exps[s] in [0, 2*length) the twist of block
    s relative to its target cycle.  pos entries additionally carry flips[s]
    in {0, 1} marking whole-block negation.
    """

    n: int
    mu: SignedPartition
    neg: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]
    pos: tuple[tuple[int, tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...]


def coordinates(g: SignedPermutation, mu: SignedPartition) -> CentralizerCoordinates:
    """Decompose g in C(w_mu); raises ValueError if g does not centralize."""
    n = g.n
    if mu.n != n:
        raise ValueError(f"{mu} is not a signed partition of {n}")
    neg_fams, pos_fams = _layout(mu)
    neg_out = []
    for length, offsets in neg_fams:
        block_of = {
            c: p for p, off in enumerate(offsets) for c in range(off, off + length)
        }
        perm = [None] * len(offsets)
        exps = [0] * len(offsets)
        for s, u in enumerate(offsets):
            t = g(u + 1)
            p = block_of.get(abs(t) - 1)
            if p is None:
                raise ValueError(f"{g} does not centralize w_{mu}")
            orbit = _neg_orbit(offsets[p], length)
            k = orbit.index(t)
            for q in range(length):
                if g(u + 1 + q) != orbit[(k + q) % (2 * length)]:
                    raise ValueError(f"{g} does not centralize w_{mu}")
            perm[s] = p
            exps[s] = k
        if sorted(perm) != list(range(len(offsets))):
            raise ValueError(f"{g} does not centralize w_{mu}")
        neg_out.append((length, tuple(perm), tuple(exps)))
    pos_out = []
    for length, offsets in pos_fams:
        block_of = {
            c: p for p, off in enumerate(offsets) for c in range(off, off + length)
        }
        perm = [None] * len(offsets)
        exps = [0] * len(offsets)
        flips = [0] * len(offsets)
        for s, u in enumerate(offsets):
            t = g(u + 1)
            p = block_of.get(abs(t) - 1)
            if p is None:
                raise ValueError(f"{g} does not centralize w_{mu}")
            eps = 1 if t < 0 else 0
            k = abs(t) - (offsets[p] + 1)
            sgn = -1 if eps else 1
            for q in range(length):
                expected = sgn * (offsets[p] + 1 + (k + q) % length)
                if g(u + 1 + q) != expected:
                    raise ValueError(f"{g} does not centralize w_{mu}")
            perm[s] = p
            exps[s] = k
            flips[s] = eps
        if sorted(perm) != list(range(len(offsets))):
            raise ValueError(f"{g} does not centralize w_{mu}")
        pos_out.append((length, tuple(perm), tuple(exps), tuple(flips)))
    return CentralizerCoordinates(n, mu, tuple(neg_out), tuple(pos_out))


def reassemble(coords: CentralizerCoordinates) -> SignedPermutation:
    """Inverse of coordinates(): rebuild the group element."""
    neg_fams, pos_fams = _layout(coords.mu)
    images = [0] * coords.n
    for (length, offsets), (_, perm, exps) in zip(neg_fams, coords.neg):
        for s, u in enumerate(offsets):
            orbit = _neg_orbit(offsets[perm[s]], length)
            k = exps[s]
            for q in range(length):
                images[u + q] = orbit[(k + q) % (2 * length)]
    for (length, offsets), (_, perm, exps, flips) in zip(pos_fams, coords.pos):
        for s, u in enumerate(offsets):
            base = offsets[perm[s]] + 1
            sgn = -1 if flips[s] else 1
            k = exps[s]
            for q in range(length):
                images[u + q] = sgn * (base + (k + q) % length)
    return SignedPermutation(tuple(images))


# -- streaming enumeration ----------------------------------------------------


@lru_cache(maxsize=None)
def _perms_with_signs(m: int):
    out = []
    for perm in permutations(range(m)):
        inversions = sum(
            1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b]
        )
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def centralizer_elements(n, mu, *, flips=True, parity=None):
    """Stream C(w_mu) as (images, neg_summary, pos_summary) triples.

    images is the raw image tuple; the summaries hold, per cycle length,
    the data a linear character sees: (length, total twist, sign of the
    block permutation) and for positive lengths additionally the number of
    negated blocks mod 2.  With flips=False only flip-free elements are
    produced (the centralizer taken inside S_n); parity=0 keeps elements
    with an even number of negative entries (the centralizer inside D_n).
    """
    neg_fams, pos_fams = _layout(mu)
    neg_choices = []
    for length, offsets in neg_fams:
        m = len(offsets)
        fam = []
        for perm, sign in _perms_with_signs(m):
            for exps in product(range(2 * length), repeat=m):
                fam.append((perm, sign, exps, sum(exps)))
        neg_choices.append((length, offsets, fam))
    pos_choices = []
    for length, offsets in pos_fams:
        m = len(offsets)
        flip_space = product((0, 1), repeat=m) if flips else ((0,) * m,)
        flip_space = tuple(flip_space)
        fam = []
        for perm, sign in _perms_with_signs(m):
            for exps in product(range(length), repeat=m):
                for eps in flip_space:
                    fam.append((perm, sign, exps, eps))
        pos_choices.append((length, offsets, fam))

    neg_orbits = [
        [_neg_orbit(off, length) for off in offsets]
        for length, offsets, _ in neg_choices
    ]

    for neg_pick in product(*(fam for _, _, fam in neg_choices)):
        neg_parity = sum(pick[3] for pick in neg_pick)
        neg_summary = tuple(
            (length, pick[3] % (2 * length), pick[1])
            for (length, _, _), pick in zip(neg_choices, neg_pick)
        )
        for pos_pick in product(*(fam for _, _, fam in pos_choices)):
            if parity is not None:
                # negative entries: one per unit of twist on a negative
                # block, a whole block per flip on a positive one
                total = neg_parity + sum(
                    length * sum(pick[3])
                    for (length, _, _), pick in zip(pos_choices, pos_pick)
                )
                if total % 2 != parity:
                    continue
            images = [0] * n
            for (length, offsets, _), orbits, (perm, _, exps, _) in zip(
                neg_choices, neg_orbits, neg_pick
            ):
                two = 2 * length
                for s, u in enumerate(offsets):
                    orbit = orbits[perm[s]]
                    k = exps[s]
                    for q in range(length):
                        images[u + q] = orbit[(k + q) % two]
            for (length, offsets, _), (perm, _, exps, eps) in zip(
                pos_choices, pos_pick
            ):
                for s, u in enumerate(offsets):
                    base = offsets[perm[s]] + 1
                    sgn = -1 if eps[s] else 1
                    k = exps[s]
                    for q in range(length):
                        images[u + q] = sgn * (base + (k + q) % length)
            pos_summary = tuple(
                (length, sum(pick[2]) % length, pick[1], sum(pick[3]) % 2)
                for (length, _, _), pick in zip(pos_choices, pos_pick)
            )
            yield tuple(images), neg_summary, pos_summary


def conjugate_by_first_flip(images):
    """Image tuple of t h t given the image tuple of h (t flips coordinate 1)."""
    out = [-v if abs(v) == 1 else v for v in images]
    out[0] = -out[0]
    return tuple(out)
