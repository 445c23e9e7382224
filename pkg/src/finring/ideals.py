"""One-sided and two-sided ideals: enumeration, idealizers, eigenrings, similarity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .construct import build_matrix, matrix_digits, matrix_index, quotient, subring_as_ring
from .limits import ResourceLimitError, current
from .ring import (
    FiniteRing,
    Subset,
    additive_closure_array,
    has_role,
    is_left_ideal_array,
    is_right_ideal_array,
    mask_from_bool,
    sort_subsets,
)

SIDES = ("left", "right", "two-sided")
_ROLE = {"left": "left-ideal", "right": "right-ideal", "two-sided": "two-sided-ideal"}


def _side(side: str) -> str:
    aliases = {"two": "two-sided", "both": "two-sided"}
    side = aliases.get(side, side)
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


def _one_sided_step(R: FiniteRing, arr: np.ndarray, side: str) -> np.ndarray:
    idx = np.flatnonzero(arr)
    out = arr.copy()
    if side == "left":
        out[R.mul[:, idx].ravel()] = True
    else:
        out[R.mul[idx, :].ravel()] = True
    return additive_closure_array(R, out)


def ideal_closure_array(R: FiniteRing, arr: np.ndarray, side: str) -> np.ndarray:
    side = _side(side)
    if side != "two-sided":
        return _one_sided_step(R, np.asarray(arr, dtype=bool), side)
    cur = _one_sided_step(R, np.asarray(arr, dtype=bool), "left")
    while True:
        nxt = _one_sided_step(R, _one_sided_step(R, cur, "right"), "left")
        if nxt.sum() == cur.sum():
            return cur
        cur = nxt


def ideal_closure(R: FiniteRing, gens: Subset | Sequence[int], side: str) -> Subset:
    """Smallest ideal of the given side containing ``gens``."""
    side = _side(side)
    arr = np.zeros(R.order, dtype=bool)
    members = gens.members if isinstance(gens, Subset) else list(gens)
    arr[list(members)] = True
    return Subset(R, mask_from_bool(ideal_closure_array(R, arr, side)), _ROLE[side])


def enumerate_ideals(R: FiniteRing, side: str, cap: int | None = None) -> list[Subset]:
    """Every ideal of the given side, sorted by member tuple."""
    side = _side(side)
    cap = current().max_ideals if cap is None else cap
    return [Subset(R, m, _ROLE[side]) for m in _ideal_masks(R, side, cap)]


@lru_cache(maxsize=256)
def _ideal_masks(R: FiniteRing, side: str, cap: int) -> tuple[int, ...]:
    found: dict[int, np.ndarray] = {}

    def note(arr: np.ndarray) -> bool:
        m = mask_from_bool(arr)
        if m in found:
            return False
        found[m] = arr
        if len(found) > cap:
            raise ResourceLimitError("ideal count", cap, len(found))
        return True

    zero = np.zeros(R.order, dtype=bool)
    zero[R.zero] = True
    note(zero)
    frontier = []
    for x in range(R.order):
        arr = np.zeros(R.order, dtype=bool)
        arr[x] = True
        principal = ideal_closure_array(R, arr, side)
        if note(principal):
            frontier.append(principal)
    principals = list(frontier)
    # every ideal is a finite sum of principal ideals
    while frontier:
        nxt = []
        for I in frontier:
            for P in principals:
                if (P & ~I).any():
                    idx_i, idx_p = np.flatnonzero(I), np.flatnonzero(P)
                    J = np.zeros(R.order, dtype=bool)
                    J[R.add[np.ix_(idx_i, idx_p)].ravel()] = True
                    if note(J):
                        nxt.append(J)
        frontier = nxt
    return tuple(sorted(found, key=lambda m: tuple(np.flatnonzero(found[m]))))


def maximal_ideals(R: FiniteRing, side: str, cap: int | None = None) -> list[Subset]:
    side = _side(side)
    proper = [I for I in enumerate_ideals(R, side, cap) if I.is_proper]
    return [I for I in proper if not any(I < J for J in proper)]


def is_maximal_ideal(R: FiniteRing, I: Subset, side: str) -> bool:
    side = _side(side)
    return any(I.mask == M.mask for M in maximal_ideals(R, side))


# -- colon ideals, idealizers, eigenrings ------------------------------------


def colon(R: FiniteRing, I: Subset, a: int, side: str = "left") -> Subset:
    """(I:a) = {x : xa ∈ I} for a left ideal; {x : ax ∈ I} on the right."""
    side = _side(side)
    if side == "left":
        arr = I.array[R.mul[:, a]]
    elif side == "right":
        arr = I.array[R.mul[a, :]]
    else:
        raise ValueError("colon ideals are one-sided")
    return Subset(R, mask_from_bool(arr), _ROLE[side])


def ideal_side(I: Subset) -> str:
    """'two-sided', 'left' or 'right', read from the role or from the set itself."""
    R, arr = I.parent, I.array
    left, right = is_left_ideal_array(R, arr), is_right_ideal_array(R, arr)
    if left and right:
        return "two-sided"
    if I.role == "left-ideal" and left:
        return "left"
    if I.role == "right-ideal" and right:
        return "right"
    if left:
        return "left"
    if right:
        return "right"
    raise ValueError("not a one-sided ideal")


def idealizer(R: FiniteRing, A: Subset) -> Subset:
    """Largest subring in which the one-sided ideal ``A`` is two-sided."""
    side = ideal_side(A)
    if side == "two-sided":
        return R.whole()
    idx = A.indices
    if side == "left":
        ok = A.array[R.mul[idx, :]].all(axis=0)  # A t ⊆ A
    else:
        ok = A.array[R.mul[:, idx]].all(axis=1)  # t A ⊆ A
    return Subset(R, mask_from_bool(ok), "subring")


def eigenring(R: FiniteRing, A: Subset) -> FiniteRing:
    """The quotient ring I(A)/A."""
    if not A.is_proper:
        raise ValueError("eigenring needs a proper ideal")
    ideal_side(A)
    S, embed = subring_as_ring(R, idealizer(R, A), label=f"I({R.label})")
    pos = {v: i for i, v in enumerate(embed.image)}
    inner = S.subset(pos[x] for x in A.members)
    E, _ = quotient(S, inner)
    return E


def eigenring_order(R: FiniteRing, A: Subset) -> int:
    return len(idealizer(R, A)) // len(A)


# -- similarity --------------------------------------------------------------


def _check_maximal(R: FiniteRing, M: Subset, side: str) -> None:
    if not is_maximal_ideal(R, M, side):
        raise ValueError(f"expected a maximal {side} ideal")


def is_similar(R: FiniteRing, M: Subset, N: Subset, side: str = "left") -> tuple[bool, int | None]:
    """Whether N = (M:c) for some c outside M; returns the smallest such c."""
    side = _side(side)
    _check_maximal(R, M, side)
    _check_maximal(R, N, side)
    for c in range(R.order):
        if c not in M and colon(R, M, c, side).mask == N.mask:
            return True, c
    return False, None


def similar_to(R: FiniteRing, M: Subset, side: str = "left") -> list[Subset]:
    """[M] = {M} ∪ {(M:c) : c outside the idealizer of M}."""
    side = _side(side)
    I = idealizer(R, M)
    masks = {M.mask}
    for c in range(R.order):
        if c not in I:
            masks.add(colon(R, M, c, side).mask)
    return sort_subsets(Subset(R, m, _ROLE[side]) for m in masks)


@dataclass(frozen=True)
class SimilarityClass:
    parent: FiniteRing
    side: str
    representative: Subset
    members: tuple[Subset, ...]
    eigenring_order: int

    def __len__(self) -> int:
        return len(self.members)


def similarity_classes(R: FiniteRing, side: str = "left") -> list[SimilarityClass]:
    side = _side(side)
    if side == "two-sided":
        raise ValueError("similarity classes are for one-sided ideals")
    classes = []
    placed: set[int] = set()
    for M in maximal_ideals(R, side):
        if M.mask in placed:
            continue
        members = similar_to(R, M, side)
        placed.update(N.mask for N in members)
        rep = members[0]
        classes.append(SimilarityClass(R, side, rep, tuple(members), eigenring_order(R, rep)))
    return sorted(classes, key=lambda c: c.representative.sort_key())


# -- matrix rings: D(M, u) and transposes -------------------------------------


def _mat_vec(base: FiniteRing, digits: np.ndarray, u: Sequence[int], n: int) -> np.ndarray:
    """X·u for every matrix X (rows of ``digits``), shape (order, n)."""
    out = np.full((digits.shape[0], n), base.zero, dtype=np.int64)
    for i in range(n):
        acc = np.full(digits.shape[0], base.zero, dtype=np.int64)
        for j in range(n):
            acc = base.add[acc, base.mul[digits[:, i * n + j], u[j]]]
        out[:, i] = acc
    return out


def d_ideal(base: FiniteRing, M: Subset, u: Sequence[int], n: int) -> Subset:
    """D(M, u) = {X in M_n(base) : Xu ∈ M^n}, checked to be a maximal left ideal."""
    if len(u) != n:
        raise ValueError("vector length must equal the matrix size")
    if all(x in M for x in u):
        raise ValueError("u lies in M^n")
    if base.zero != 0:
        raise ValueError("base ring must have zero at index 0")
    T = build_matrix(n, base)
    prod = _mat_vec(base, matrix_digits(base, n), u, n)
    arr = M.array[prod].all(axis=1)
    D = Subset(T, mask_from_bool(arr), "left-ideal")
    if not has_role(D, "left-ideal") or not is_maximal_ideal(T, D, "left"):
        raise AssertionError("D(M,u) is not a maximal left ideal")
    return D


def transpose_element(base: FiniteRing, n: int, x: int) -> int:
    q = base.order
    digits = [(x // q ** (n * n - 1 - p)) % q for p in range(n * n)]
    return matrix_index([digits[j * n + i] for i in range(n) for j in range(n)], q)


def transpose_ideal(base: FiniteRing, n: int, M: Subset) -> Subset:
    """Elementwise transpose; over a commutative base this swaps left and right ideals."""
    if not base.is_commutative:
        raise ValueError("transpose only preserves ideals over a commutative base")
    T = M.parent
    role = {"left-ideal": "right-ideal", "right-ideal": "left-ideal"}.get(M.role, M.role)
    perm = _transpose_perm(base, n)
    return Subset(T, mask_from_bool(_scatter(T.order, perm[M.indices])), role)


@lru_cache(maxsize=32)
def _transpose_perm(base: FiniteRing, n: int) -> np.ndarray:
    return np.array([transpose_element(base, n, x) for x in range(base.order ** (n * n))], dtype=np.int64)


def _scatter(order: int, idx: np.ndarray) -> np.ndarray:
    arr = np.zeros(order, dtype=bool)
    arr[idx] = True
    return arr


# -- radicals, primitive ideals, the Max partition ----------------------------


def jacobson_radical(R: FiniteRing) -> Subset:
    """Intersection of the maximal left ideals, cross-checked against the right side."""
    left = _intersection(R, maximal_ideals(R, "left"))
    right = _intersection(R, maximal_ideals(R, "right"))
    if left != right:
        raise AssertionError("left and right Jacobson radicals disagree")
    return Subset(R, left, "two-sided-ideal")


def _intersection(R: FiniteRing, subsets: Sequence[Subset]) -> int:
    m = (1 << R.order) - 1
    for S in subsets:
        m &= S.mask
    return m


def annihilator(R: FiniteRing, M: Subset, side: str = "left") -> Subset:
    """Annihilator of R/M: {t : tR ⊆ M} on the left, {t : Rt ⊆ M} on the right."""
    side = _side(side)
    if side == "left":
        arr = M.array[R.mul].all(axis=1)
    else:
        arr = M.array[R.mul].all(axis=0)
    return Subset(R, mask_from_bool(arr), "two-sided-ideal")


def primitive_ideals(R: FiniteRing, side: str = "left") -> list[Subset]:
    side = _side(side)
    masks = {annihilator(R, M, side).mask for M in maximal_ideals(R, side)}
    return sort_subsets(Subset(R, m, "two-sided-ideal") for m in masks)


def is_quasi_duo(R: FiniteRing, side: str = "left") -> bool:
    two = {I.mask for I in maximal_ideals(R, "two-sided")}
    return all(M.mask in two for M in maximal_ideals(R, side))


@dataclass(frozen=True)
class MaxPartitionReport:
    maxl: tuple[Subset, ...]
    maxr: tuple[Subset, ...]
    max: tuple[Subset, ...]
    maxl_prime: tuple[Subset, ...]
    maxr_prime: tuple[Subset, ...]
    max_prime: tuple[Subset, ...]
    max_lr: tuple[Subset, ...]
    prml: tuple[Subset, ...]
    prmr: tuple[Subset, ...]
    j: Subset
    j_prime: Subset


def max_partition_report(R: FiniteRing) -> MaxPartitionReport:
    maxl = maximal_ideals(R, "left")
    maxr = maximal_ideals(R, "right")
    mx = maximal_ideals(R, "two-sided")
    l_masks, mx_masks = {M.mask for M in maxl}, {M.mask for M in mx}
    max_lr = [M for M in mx if M.mask in l_masks]
    return MaxPartitionReport(
        maxl=tuple(maxl),
        maxr=tuple(maxr),
        max=tuple(mx),
        maxl_prime=tuple(M for M in maxl if M.mask not in mx_masks),
        maxr_prime=tuple(M for M in maxr if M.mask not in mx_masks),
        max_prime=tuple(M for M in mx if M.mask not in l_masks),
        max_lr=tuple(max_lr),
        prml=tuple(primitive_ideals(R, "left")),
        prmr=tuple(primitive_ideals(R, "right")),
        j=jacobson_radical(R),
        # empty intersection is the whole ring
        j_prime=Subset(R, _intersection(R, max_lr), "two-sided-ideal"),
    )
