"""Subring lattices, maximal subrings, automorphisms and the named maximal-subring constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .construct import build_field, build_matrix, build_product, prime_power, quotient
from .ideals import enumerate_ideals
from .iso import find_isomorphism, iter_isomorphisms
from .limits import ResourceLimitError, current
from .ring import (
    FiniteRing,
    RingMap,
    Subset,
    bool_from_mask,
    is_left_ideal_array,
    is_right_ideal_array,
    is_subring_array,
    mask_from_bool,
    sort_subsets,
)

# -- closure -----------------------------------------------------------------


def _close(R: FiniteRing, known: np.ndarray, fresh: np.ndarray) -> np.ndarray:
    """Close ``known ∪ fresh`` under + and ×, given that ``known`` is already closed.

    Semi-naive: each round only combines the newest elements with everything.
    """
    have = known | fresh
    new = np.flatnonzero(fresh & ~known)
    while new.size:
        allx = np.flatnonzero(have)
        found = np.zeros_like(have)
        found[R.add[np.ix_(new, allx)].ravel()] = True
        found[R.mul[np.ix_(new, allx)].ravel()] = True
        found[R.mul[np.ix_(allx, new)].ravel()] = True
        new = np.flatnonzero(found & ~have)
        have |= found
    return have


def closure_array(R: FiniteRing, gens: np.ndarray) -> np.ndarray:
    seed = np.array(gens, dtype=bool)
    seed[R.one] = True
    seed[R.zero] = True
    return _close(R, np.zeros(R.order, dtype=bool), seed)


def subring_closure(R: FiniteRing, gens: Subset | Iterable[int] = ()) -> Subset:
    """Smallest unital subring containing ``gens``."""
    arr = np.zeros(R.order, dtype=bool)
    members = gens.members if isinstance(gens, Subset) else list(gens)
    arr[list(members)] = True
    return Subset(R, mask_from_bool(closure_array(R, arr)), "subring")


def prime_subring(R: FiniteRing) -> Subset:
    return subring_closure(R)


def _adjoin(R: FiniteRing, S: np.ndarray, x: int) -> np.ndarray:
    fresh = np.zeros_like(S)
    fresh[x] = True
    return _close(R, S, fresh)


def _coset_reps(R: FiniteRing, S: np.ndarray) -> list[int]:
    """Smallest element of each additive coset x+S outside S.

    Adjoining x or x+s (s in S) generates the same subring.
    """
    idx = np.flatnonzero(S)
    covered = S.copy()
    reps = []
    for x in range(R.order):
        if not covered[x]:
            reps.append(x)
            covered[R.add[x, idx]] = True
    return reps


# -- the lattice -------------------------------------------------------------


@dataclass(frozen=True)
class SubringLattice:
    parent: FiniteRing
    subrings: tuple[Subset, ...]
    maximal: tuple[int, ...]
    truncated: bool

    def maximal_subrings(self) -> list[Subset]:
        if self.truncated:
            raise ResourceLimitError("subring count", current().max_subrings)
        return [self.subrings[i] for i in self.maximal]


def enumerate_subrings(R: FiniteRing, cap: int | None = None, base: Subset | None = None) -> SubringLattice:
    """Every unital subring (containing ``base``, if given), breadth-first.

    Each known subring is extended by one outside element per additive coset
    and closed; a proper subring is maximal when every extension is the whole ring.
    """
    cap = current().max_subrings if cap is None else cap
    base_mask = base.mask if base is not None else 0
    masks, maximal, truncated = _lattice(R, cap, base_mask)
    subs = tuple(Subset(R, m, "subring") for m in masks)
    return SubringLattice(R, subs, maximal, truncated)


@lru_cache(maxsize=128)
def _lattice(R: FiniteRing, cap: int, base_mask: int) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    full = (1 << R.order) - 1
    start = closure_array(R, bool_from_mask(base_mask, R.order))
    seen: dict[int, bool] = {}
    queue = [start]
    seen[mask_from_bool(start)] = False
    truncated = False
    head = 0
    while head < len(queue):
        S = queue[head]
        head += 1
        key = mask_from_bool(S)
        if key == full:
            continue
        all_full = True
        for x in _coset_reps(R, S):
            T = _adjoin(R, S, x)
            tkey = mask_from_bool(T)
            if tkey != full:
                all_full = False
            if tkey not in seen:
                if len(seen) >= cap:
                    truncated = True
                    continue
                seen[tkey] = False
                queue.append(T)
        seen[key] = all_full
    order = sorted(seen, key=lambda m: _members(m))
    maximal = tuple(i for i, m in enumerate(order) if seen[m] and m != full)
    return tuple(order), maximal, truncated


def _members(mask: int) -> tuple[int, ...]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def maximal_subrings(R: FiniteRing, cap: int | None = None, base: Subset | None = None) -> list[Subset]:
    """Maximal subrings of R (only those containing ``base`` when it is given)."""
    return enumerate_subrings(R, cap, base).maximal_subrings()


def is_maximal_subring(R: FiniteRing, S: Subset) -> bool:
    """S is maximal iff S[x] = R for every x outside S."""
    arr = S.array
    if not is_subring_array(R, arr):
        raise ValueError("not a unital subring")
    if S.is_whole:
        raise ValueError("the whole ring is not a proper subring")
    return all(_adjoin(R, arr, x).all() for x in _coset_reps(R, arr))


def find_maximal_subring(R: FiniteRing, base: Subset | None = None) -> Subset | None:
    """Some maximal subring containing ``base``, by greedy ascent; None if none exists.

    Climbs while some single-element extension is still proper. When the
    starting subring is already the whole ring there is nothing to find.
    """
    start = base.mask if base is not None else 0
    S = closure_array(R, bool_from_mask(start, R.order))
    if S.all():
        return None
    while True:
        for x in _coset_reps(R, S):
            T = _adjoin(R, S, x)
            if not T.all():
                S = T
                break
        else:
            return Subset(R, mask_from_bool(S), "subring")


# -- automorphisms -----------------------------------------------------------


@dataclass(frozen=True)
class AutomorphismSet:
    parent: FiniteRing
    maps: tuple[RingMap, ...]
    group_order: int

    def identity(self) -> RingMap:
        return next(m for m in self.maps if m.image == tuple(range(self.parent.order)))


def automorphisms(R: FiniteRing) -> AutomorphismSet:
    """All ring automorphisms, with closure under composition and inverse verified."""
    maps = tuple(iter_isomorphisms(R, R))
    images = {m.image for m in maps}
    ident = tuple(range(R.order))
    if ident not in images:
        raise AssertionError("identity missing from automorphism search")
    for f in images:
        inv = [0] * R.order
        for x, y in enumerate(f):
            inv[y] = x
        if tuple(inv) not in images:
            raise AssertionError("automorphisms not closed under inverse")
        for g in images:
            if tuple(f[y] for y in g) not in images:
                raise AssertionError("automorphisms not closed under composition")
    return AutomorphismSet(R, maps, len(maps))


def compose(f: RingMap, g: RingMap) -> tuple[int, ...]:
    """Image array of f∘g."""
    return tuple(f.image[y] for y in g.image)


def inverse_image(f: RingMap) -> tuple[int, ...]:
    inv = [0] * len(f.image)
    for x, y in enumerate(f.image):
        inv[y] = x
    return tuple(inv)


# -- constructions inside R × R and A × B ----------------------------------------


def product_pair(A: FiniteRing, B: FiniteRing) -> FiniteRing:
    return build_product([A, B])


def _pairs_mask(nb: int, pairs: Iterable[tuple[int, int]]) -> int:
    m = 0
    for a, b in pairs:
        m |= 1 << (a * nb + b)
    return m


def diagonal(R: FiniteRing) -> Subset:
    P = product_pair(R, R)
    return Subset(P, _pairs_mask(R.order, ((a, a) for a in range(R.order))), "subring")


def delta_subring(R: FiniteRing, I: Subset) -> Subset:
    """Δ(I) = {(a+i, a+j) : a in R; i, j in I} inside R×R."""
    arr = I.array
    if not (is_left_ideal_array(R, arr) and is_right_ideal_array(R, arr)):
        raise ValueError("Δ(I) needs a two-sided ideal")
    P = product_pair(R, R)
    idx = I.indices
    n = R.order
    pairs = set()
    for a in range(n):
        shifted = R.add[a, idx]
        for u in shifted.tolist():
            for v in shifted.tolist():
                pairs.add((u, v))
    S = Subset(P, _pairs_mask(n, pairs), "subring")
    if not is_subring_array(P, S.array):
        raise AssertionError("Δ(I) is not a subring")
    return S


def twisted_diagonal(R: FiniteRing, s1: RingMap, s2: RingMap) -> Subset:
    """{(σ1(x), σ2(x)) : x in R} inside R×R."""
    for s in (s1, s2):
        if s.source != R or s.target != R or not s.is_isomorphism:
            raise ValueError("twisted diagonal needs automorphisms of R")
    P = product_pair(R, R)
    return Subset(P, _pairs_mask(R.order, zip(s1.image, s2.image)), "subring")


def split_left(A: FiniteRing, B: FiniteRing, A1: Subset) -> Subset:
    """A1 × B inside A×B."""
    P = product_pair(A, B)
    return Subset(P, _pairs_mask(B.order, ((a, b) for a in A1.members for b in range(B.order))), "subring")


def split_right(A: FiniteRing, B: FiniteRing, B1: Subset) -> Subset:
    """A × B1 inside A×B."""
    P = product_pair(A, B)
    return Subset(P, _pairs_mask(B.order, ((a, b) for a in range(A.order) for b in B1.members)), "subring")


def is_simple(R: FiniteRing) -> bool:
    """Only the trivial two-sided ideals."""
    return len(enumerate_ideals(R, "two-sided")) == 2


def catalog_maxsub_product_simple(R: FiniteRing) -> list[Subset]:
    """Splits A×R, R×A over maximal subrings A of R, plus every twisted diagonal."""
    if not is_simple(R):
        raise ValueError("catalog needs a simple ring")
    found: dict[int, Subset] = {}
    for A in maximal_subrings(R):
        for S in (split_left(R, R, A), split_right(R, R, A)):
            found.setdefault(S.mask, S)
    auts = automorphisms(R).maps
    for s1 in auts:
        for s2 in auts:
            S = twisted_diagonal(R, s1, s2)
            found.setdefault(S.mask, S)
    return sort_subsets(found.values())


def homomorphically_non_isomorphic(A: FiniteRing, B: FiniteRing) -> bool:
    """No proper quotient of A is isomorphic to a proper quotient of B."""
    qa = [quotient(A, I)[0] for I in enumerate_ideals(A, "two-sided") if I.is_proper]
    qb = [quotient(B, J)[0] for J in enumerate_ideals(B, "two-sided") if J.is_proper]
    return not any(find_isomorphism(X, Y) is not None for X in qa for Y in qb)


def split_maxsub(A: FiniteRing, B: FiniteRing) -> list[Subset]:
    """A1×B and A×B1 over maximal subrings A1 of A and B1 of B."""
    if not homomorphically_non_isomorphic(A, B):
        raise ValueError("A and B have isomorphic proper quotients")
    found: dict[int, Subset] = {}
    for A1 in maximal_subrings(A):
        S = split_left(A, B, A1)
        found.setdefault(S.mask, S)
    for B1 in maximal_subrings(B):
        S = split_right(A, B, B1)
        found.setdefault(S.mask, S)
    return sort_subsets(found.values())


def identify_simple_ring(R: FiniteRing) -> tuple[int, int] | None:
    """(n, q) with R ≅ M_n(GF(q)), trying n = 1, 2, ... in turn."""
    if not is_simple(R):
        raise ValueError("identify_simple_ring needs a simple ring")
    n = 1
    while 2 ** (n * n) <= R.order:
        q = round(R.order ** (1.0 / (n * n)))
        for cand in (q - 1, q, q + 1):
            if cand >= 2 and cand ** (n * n) == R.order and prime_power(cand):
                target = build_field(cand) if n == 1 else build_matrix(n, build_field(cand))
                if find_isomorphism(R, target) is not None:
                    return n, cand
        n += 1
    return None


def split_components(A: FiniteRing, B: FiniteRing, S: Subset) -> tuple[str, Subset] | None:
    """Recognise S ⊆ A×B as A1×B or A×B1; returns ('left', A1) / ('right', B1) or None."""
    nb = B.order
    pairs = [(x // nb, x % nb) for x in S.members]
    first = {a for a, _ in pairs}
    second = {b for _, b in pairs}
    if len(pairs) == len(first) * nb and second == set(range(nb)):
        return "left", A.subset(first, "subring")
    if len(pairs) == A.order * len(second) and first == set(range(A.order)):
        return "right", B.subset(second, "subring")
    return None


def subrings_containing(R: FiniteRing, S: Subset, cap: int | None = None) -> list[Subset]:
    return list(enumerate_subrings(R, cap, base=S).subrings)


def parallel_classes(base: FiniteRing, n: int) -> list[frozenset[tuple[int, ...]]]:
    """Nonzero vectors of base^n grouped by right-parallelism v = u·c, c a nonzero scalar."""
    classes: dict[frozenset, None] = {}
    nonzero = [c for c in range(base.order) if c != base.zero]
    for u in itertools.product(range(base.order), repeat=n):
        if all(x == base.zero for x in u):
            continue
        cls = frozenset(tuple(int(base.mul[x, c]) for x in u) for c in nonzero)
        classes.setdefault(cls, None)
    return list(classes)


def vectors_outside(base: FiniteRing, M: Subset, n: int) -> list[tuple[int, ...]]:
    return [u for u in itertools.product(range(base.order), repeat=n) if any(x not in M for x in u)]


def as_pairs(B_order: int, S: Subset) -> list[tuple[int, int]]:
    return [(x // B_order, x % B_order) for x in S.members]


def subset_from_pairs(P: FiniteRing, B_order: int, pairs: Sequence[tuple[int, int]], role: str = "raw") -> Subset:
    return Subset(P, _pairs_mask(B_order, pairs), role)
