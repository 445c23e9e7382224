"""Finite rings as explicit operation tables, plus subsets and maps between them."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

ROLES = ("raw", "subring", "left-ideal", "right-ideal", "two-sided-ideal")


class RingAxiomError(ValueError):
    """A table violates a ring axiom; ``witness`` holds the offending elements."""

    def __init__(self, axiom: str, witness: tuple[int, ...] = ()):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        detail = f" at {self.witness}" if self.witness else ""
        super().__init__(f"{axiom} fails{detail}")


# -- bit-vector helpers ------------------------------------------------------


def mask_from_bool(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(np.asarray(arr, dtype=bool), bitorder="little").tobytes(), "little")


def bool_from_mask(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def mask_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        out.append(i)
        mask ^= low
    return tuple(out)


# -- the ring itself ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A unital ring on the elements ``0..order-1``.

    Tables are stored as read-only integer arrays. Instances are immutable, so
    every derived quantity is cached on first use. Two rings compare equal when
    their tables, identity and zero coincide; the label is cosmetic.
    """

    order: int
    add: np.ndarray
    mul: np.ndarray
    one: int
    zero: int = 0
    label: str = "ring"

    def __post_init__(self) -> None:
        for name in ("add", "mul"):
            arr = np.array(getattr(self, name), dtype=np.int32)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    # identity / hashing

    @cached_property
    def key(self) -> str:
        h = hashlib.sha1()
        h.update(np.array([self.order, self.one, self.zero], dtype=np.int64).tobytes())
        h.update(self.add.tobytes())
        h.update(self.mul.tobytes())
        return h.hexdigest()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteRing) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label}, order={self.order})"

    # element arithmetic

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    @cached_property
    def neg(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        out.setflags(write=False)
        return out

    def minus(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def multiple(self, k: int, a: int) -> int:
        """``k·a`` for a nonnegative integer ``k``."""
        acc, base = self.zero, a
        while k:
            if k & 1:
                acc = int(self.add[acc, base])
            base = int(self.add[base, base])
            k >>= 1
        return acc

    def power(self, a: int, k: int) -> int:
        acc, base = self.one, a
        while k:
            if k & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            k >>= 1
        return acc

    # whole-ring queries

    @cached_property
    def additive_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        k = 1
        pending = np.ones(self.order, dtype=bool)
        while pending.any():
            hit = pending & (cur == self.zero)
            orders[hit] = k
            pending &= ~hit
            cur = self.add[cur, np.arange(self.order)]
            k += 1
        # the loop above reports 1 for zero and k for the first k with k·x = 0
        return orders

    @cached_property
    def characteristic(self) -> int:
        return int(self.additive_orders[self.one])

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def center_mask(self) -> int:
        return mask_from_bool((self.mul == self.mul.T).all(axis=1))

    @cached_property
    def nilpotent_mask(self) -> int:
        # x nilpotent iff x^k = 0 for some k <= n iff x^(2^m) = 0 with 2^m >= n
        cur = np.arange(self.order)
        steps = max(1, (self.order - 1).bit_length())
        for _ in range(steps):
            cur = self.mul[cur, cur]
        return mask_from_bool(cur == self.zero)

    @cached_property
    def unit_mask(self) -> int:
        return mask_from_bool((self.mul == self.one).any(axis=1))

    @cached_property
    def inverse(self) -> np.ndarray:
        """Multiplicative inverse of each unit, -1 elsewhere."""
        out = np.full(self.order, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.mul == self.one)
        out[rows] = cols
        return out

    @cached_property
    def power_shape(self) -> tuple[tuple[int, int], ...]:
        """For each x, (tail, period) of the sequence x, x², x³, ..."""
        shapes = []
        mul = self.mul
        for x in range(self.order):
            seen: dict[int, int] = {}
            cur, k = x, 1
            while cur not in seen:
                seen[cur] = k
                cur = int(mul[cur, x])
                k += 1
            shapes.append((seen[cur], k - seen[cur]))
        return tuple(shapes)

    @cached_property
    def element_signature(self) -> tuple[tuple[int, ...], ...]:
        """Isomorphism-invariant fingerprint of each element."""
        mul = self.mul
        central = bool_from_mask(self.center_mask, self.order)
        zero = self.zero
        left_ann = (mul == zero).sum(axis=1)
        right_ann = (mul == zero).sum(axis=0)
        sigs = []
        for x in range(self.order):
            sigs.append(
                (
                    int(self.additive_orders[x]),
                    *self.power_shape[x],
                    int(central[x]),
                    int(left_ann[x]),
                    int(right_ann[x]),
                    len(set(mul[x].tolist())),
                    len(set(mul[:, x].tolist())),
                )
            )
        return tuple(sigs)

    def elements(self) -> range:
        return range(self.order)

    def subset(self, members: Iterable[int] | int, role: str = "raw") -> "Subset":
        mask = members if isinstance(members, int) else mask_from_indices(members)
        return Subset(self, mask, role)

    def whole(self, role: str = "subring") -> "Subset":
        return Subset(self, (1 << self.order) - 1, role)

    def zero_ideal(self) -> "Subset":
        return Subset(self, 1 << self.zero, "two-sided-ideal")


# -- subsets -----------------------------------------------------------------


@dataclass(frozen=True)
class Subset:
    """A set of element indices of ``parent``, stored as an integer bit-vector.

    Equality ignores ``role``: a two-sided ideal found as a left ideal is the
    same set as the one found as a right ideal.
    """

    parent: FiniteRing = field(repr=False)
    mask: int
    role: str = field(default="raw", compare=False)

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"unknown subset role {self.role!r}")

    @cached_property
    def members(self) -> tuple[int, ...]:
        return indices_from_mask(self.mask)

    @cached_property
    def array(self) -> np.ndarray:
        return bool_from_mask(self.mask, self.parent.order)

    @property
    def indices(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: object) -> bool:
        return isinstance(x, (int, np.integer)) and bool(self.mask >> int(x) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __le__(self, other: "Subset") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subset") -> bool:
        return self.mask != other.mask and self <= other

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.parent, self.mask & other.mask, "raw")

    def sort_key(self) -> tuple[int, ...]:
        return self.members

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << self.parent.order) - 1

    @property
    def is_proper(self) -> bool:
        return not self.is_whole

    def with_role(self, role: str) -> "Subset":
        return Subset(self.parent, self.mask, role)

    def __repr__(self) -> str:
        shown = list(self.members[:12])
        more = "..." if len(self.members) > 12 else ""
        return f"Subset({self.role}, |{len(self)}|, {shown}{more})"


def sort_subsets(subsets: Iterable[Subset]) -> list[Subset]:
    return sorted(subsets, key=Subset.sort_key)


def additive_closure_array(R: FiniteRing, arr: np.ndarray) -> np.ndarray:
    """Additive subgroup generated by a boolean membership array."""
    cur = np.array(arr, dtype=bool)
    cur[R.zero] = True
    while True:
        idx = np.flatnonzero(cur)
        new = cur.copy()
        new[R.add[np.ix_(idx, idx)].ravel()] = True
        if new.sum() == idx.size:
            return cur
        cur = new


def is_additive_subgroup(R: FiniteRing, arr: np.ndarray) -> bool:
    idx = np.flatnonzero(arr)
    return idx.size > 0 and bool(arr[R.add[np.ix_(idx, idx)]].all())


def is_subring_array(R: FiniteRing, arr: np.ndarray) -> bool:
    idx = np.flatnonzero(arr)
    return (
        bool(arr[R.one])
        and is_additive_subgroup(R, arr)
        and bool(arr[R.mul[np.ix_(idx, idx)]].all())
    )


def is_left_ideal_array(R: FiniteRing, arr: np.ndarray) -> bool:
    idx = np.flatnonzero(arr)
    return is_additive_subgroup(R, arr) and bool(arr[R.mul[:, idx]].all())


def is_right_ideal_array(R: FiniteRing, arr: np.ndarray) -> bool:
    idx = np.flatnonzero(arr)
    return is_additive_subgroup(R, arr) and bool(arr[R.mul[idx, :]].all())


def has_role(S: Subset, role: str) -> bool:
    R, arr = S.parent, S.array
    if role == "raw":
        return True
    if role == "subring":
        return is_subring_array(R, arr)
    if role == "left-ideal":
        return is_left_ideal_array(R, arr)
    if role == "right-ideal":
        return is_right_ideal_array(R, arr)
    if role == "two-sided-ideal":
        return is_left_ideal_array(R, arr) and is_right_ideal_array(R, arr)
    raise ValueError(f"unknown role {role!r}")


# -- maps --------------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    source: FiniteRing = field(repr=False)
    target: FiniteRing = field(repr=False)
    image: tuple[int, ...]
    is_homomorphism: bool
    is_isomorphism: bool

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __getitem__(self, x: int) -> int:
        return self.image[x]

    def image_of(self, S: Subset) -> Subset:
        return self.target.subset({self.image[x] for x in S.members})


def check_homomorphism(source: FiniteRing, target: FiniteRing, image: Sequence[int]) -> bool:
    """Independent all-pairs verification that ``image`` is a unital homomorphism."""
    f = np.asarray(image, dtype=np.int64)
    if f.shape != (source.order,) or f.min() < 0 or f.max() >= target.order:
        return False
    if f[source.one] != target.one:
        return False
    if not np.array_equal(f[source.add], target.add[np.ix_(f, f)]):
        return False
    return bool(np.array_equal(f[source.mul], target.mul[np.ix_(f, f)]))


def make_map(source: FiniteRing, target: FiniteRing, image: Sequence[int]) -> RingMap:
    image = tuple(int(v) for v in image)
    hom = check_homomorphism(source, target, image)
    iso = hom and source.order == target.order and len(set(image)) == source.order
    return RingMap(source, target, image, hom, iso)


# -- validation --------------------------------------------------------------


def validate_tables(
    order: int,
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    one: int,
    label: str = "ring",
) -> FiniteRing:
    """Check every ring axiom exhaustively and return the ring.

    Raises :class:`RingAxiomError` naming the first violated axiom together
    with a witness tuple of element indices.
    """
    n = int(order)
    if n < 2:
        raise RingAxiomError("identity differs from zero (order must be at least 2)")
    A = np.asarray(add)
    M = np.asarray(mul)
    if A.shape != (n, n) or M.shape != (n, n):
        raise RingAxiomError("tables must be order x order")
    for name, T in (("addition", A), ("multiplication", M)):
        if not np.issubdtype(T.dtype, np.integer):
            raise RingAxiomError(f"{name} table must hold integers")
        bad = np.argwhere((T < 0) | (T >= n))
        if bad.size:
            raise RingAxiomError(f"{name} table entries in range", tuple(bad[0]))
    if not 0 <= one < n:
        raise RingAxiomError("identity index in range", (one,))
    A = A.astype(np.int64)
    M = M.astype(np.int64)
    idx = np.arange(n)

    asym = np.argwhere(A != A.T)
    if asym.size:
        raise RingAxiomError("addition commutative", tuple(asym[0]))
    zeros = [z for z in range(n) if np.array_equal(A[z], idx)]
    if not zeros:
        raise RingAxiomError("additive identity exists")
    zero = zeros[0]
    no_inv = np.flatnonzero(~(A == zero).any(axis=1))
    if no_inv.size:
        raise RingAxiomError("additive inverse exists", (int(no_inv[0]),))
    if zero == one:
        raise RingAxiomError("identity differs from zero", (one,))
    bad = np.flatnonzero((M[one] != idx) | (M[:, one] != idx))
    if bad.size:
        raise RingAxiomError("one is a two-sided identity", (int(bad[0]),))

    for a in range(n):
        # (a+b)+c == a+(b+c) for all b, c
        lhs = A[A[a]]
        rhs = A[a][A]
        _raise_first(lhs != rhs, "addition associative", a)
        lhs = M[M[a]]
        rhs = M[a][M]
        _raise_first(lhs != rhs, "multiplication associative", a)
        # a(b+c) == ab+ac
        lhs = M[a][A]
        rhs = A[np.ix_(M[a], M[a])]
        _raise_first(lhs != rhs, "left distributive", a)
        # (b+c)a == ba+ca
        lhs = M[:, a][A]
        rhs = A[np.ix_(M[:, a], M[:, a])]
        _raise_first(lhs != rhs, "right distributive", a)
    return FiniteRing(n, A, M, int(one), int(zero), label)


def _raise_first(diff: np.ndarray, axiom: str, a: int) -> None:
    hit = np.argwhere(diff)
    if hit.size:
        b, c = hit[0]
        raise RingAxiomError(axiom, (a, int(b), int(c)))


def validate(R: FiniteRing) -> FiniteRing:
    return validate_tables(R.order, R.add, R.mul, R.one, R.label)


# -- simple queries as free functions ---------------------------------------


def characteristic(R: FiniteRing) -> int:
    return R.characteristic


def center(R: FiniteRing) -> Subset:
    return Subset(R, R.center_mask, "subring")


def nilpotents(R: FiniteRing) -> Subset:
    return Subset(R, R.nilpotent_mask, "raw")


def units(R: FiniteRing) -> Subset:
    return Subset(R, R.unit_mask, "raw")


def is_commutative(R: FiniteRing) -> bool:
    return R.is_commutative


def is_field(R: FiniteRing) -> bool:
    """Commutative with every nonzero element invertible."""
    return R.is_commutative and len(units(R)) == R.order - 1
