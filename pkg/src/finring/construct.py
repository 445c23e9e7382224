"""Ring constructors, quotients, subring extraction and the JSON ring format."""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np

from .limits import check_order
from .ring import (
    FiniteRing,
    RingMap,
    Subset,
    is_left_ideal_array,
    is_right_ideal_array,
    is_subring_array,
    make_map,
    validate_tables,
)

# -- integers and fields -----------------------------------------------------


def build_cyclic(n: int) -> FiniteRing:
    """The ring Z_n."""
    if n < 2:
        raise ValueError(f"Z(n) needs n >= 2, got {n}")
    check_order(n)
    return _cyclic(n)


@lru_cache(maxsize=None)
def _cyclic(n: int) -> FiniteRing:
    i = np.arange(n)
    return FiniteRing(n, (i[:, None] + i[None, :]) % n, (i[:, None] * i[None, :]) % n, 1, 0, f"Z({n})")


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _polymod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f`` (constant term first)."""
    a = list(a)
    d = len(f) - 1
    for top in range(len(a) - 1, d - 1, -1):
        c = a[top] % p
        if c:
            for i in range(d + 1):
                a[top - d + i] = (a[top - d + i] - c * f[i]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def _divides(g: Sequence[int], f: Sequence[int], p: int) -> bool:
    return not any(_polymod(list(f), g, p))


def field_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` over Z_p.

    Candidates are ordered by their low coefficients, constant term first.
    Returned coefficients are constant term first and include the leading 1.
    """
    for low in itertools.product(range(p), repeat=k):
        f = (*low, 1)
        if k == 1 or all(
            not _divides((*g, 1), f, p)
            for d in range(1, k // 2 + 1)
            for g in itertools.product(range(p), repeat=d)
        ):
            return f
    raise AssertionError("irreducible polynomials exist in every degree")


def build_field(q: int) -> FiniteRing:
    """GF(q) as Z_p[x]/(f); element index is the base-p number of its coefficients."""
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"GF({q}): {q} is not a prime power")
    check_order(q)
    return _field(q)


@lru_cache(maxsize=None)
def _field(q: int) -> FiniteRing:
    p, k = prime_power(q)  # type: ignore[misc]
    if k == 1:
        base = _cyclic(p)
        return FiniteRing(q, base.add, base.mul, 1, 0, f"GF({q})")
    f = field_modulus(p, k)
    coeffs = [[(x // p**i) % p for i in range(k)] for x in range(q)]
    weights = [p**i for i in range(k)]

    def encode(c: Sequence[int]) -> int:
        return sum(ci * w for ci, w in zip(c, weights))

    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        ca = coeffs[a]
        for b in range(a, q):
            cb = coeffs[b]
            s = encode([(x + y) % p for x, y in zip(ca, cb)])
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        prod[i + j] += x * y
            m = encode(_polymod(prod, f, p))
            add[a, b] = add[b, a] = s
            mul[a, b] = mul[b, a] = m
    return FiniteRing(q, add, mul, 1, 0, f"GF({q})")


# -- normalization -----------------------------------------------------------


def relabel(R: FiniteRing, perm: Sequence[int], label: str | None = None) -> FiniteRing:
    """Rename element ``x`` to ``perm[x]``."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(R.order)
    add = perm[R.add[np.ix_(inv, inv)]]
    mul = perm[R.mul[np.ix_(inv, inv)]]
    return FiniteRing(R.order, add, mul, int(perm[R.one]), int(perm[R.zero]), label or R.label)


def normalized(R: FiniteRing) -> FiniteRing:
    """Same ring with zero moved to index 0 (swapping with whatever was there)."""
    if R.zero == 0:
        return R
    perm = np.arange(R.order)
    perm[0], perm[R.zero] = R.zero, 0
    return relabel(R, perm)


# -- matrices ----------------------------------------------------------------


def matrix_digits(R: FiniteRing, k: int) -> np.ndarray:
    """Entries of every element of M_k(R), shape (order, k*k), row-major.

    Element index = sum of entry_p * |R|**(k*k-1-p): the first entry is most
    significant, so index order is lexicographic in the entries.
    """
    q, size = R.order, k * k
    idx = np.arange(q**size, dtype=np.int64)
    return np.stack([(idx // q ** (size - 1 - p)) % q for p in range(size)], axis=1)


def matrix_index(entries: Sequence[int], q: int) -> int:
    out = 0
    for e in entries:
        out = out * q + int(e)
    return out


def _matrix_tables(R: FiniteRing, rows: np.ndarray, k: int, positions: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Add/mul tables of matrices whose entries at ``positions`` are stored in ``rows``.

    Entries outside ``positions`` are zero. Returns tables over full-matrix
    digit vectors; the caller maps those back to its own indices.
    """
    size = k * k
    m = rows.shape[0]
    full = np.zeros((m, size), dtype=np.int64)
    full[:, positions] = rows
    a = full[:, None, :]
    b = full[None, :, :]
    add_d = [R.add[a[..., p], b[..., p]] for p in range(size)]
    mul_d = []
    for i in range(k):
        for j in range(k):
            acc = np.zeros((m, m), dtype=np.int64)
            for l in range(k):
                acc = R.add[acc, R.mul[a[..., i * k + l], b[..., l * k + j]]]
            mul_d.append(acc)
    return np.stack(add_d, axis=-1), np.stack(mul_d, axis=-1)


def build_matrix(k: int, R: FiniteRing) -> FiniteRing:
    """M_k(R) with row-major, most-significant-first element encoding."""
    if k < 1:
        raise ValueError(f"M(k, R) needs k >= 1, got {k}")
    check_order(R.order ** (k * k), "matrix ring order")
    return _matrix(k, normalized(R))


@lru_cache(maxsize=None)
def _matrix(k: int, R: FiniteRing) -> FiniteRing:
    q = R.order
    rows = matrix_digits(R, k)
    add_d, mul_d = _matrix_tables(R, rows, k, list(range(k * k)))
    weights = q ** np.arange(k * k - 1, -1, -1, dtype=np.int64)
    add = (add_d * weights).sum(axis=-1)
    mul = (mul_d * weights).sum(axis=-1)
    ident = [R.one if i == j else 0 for i in range(k) for j in range(k)]
    return FiniteRing(q ** (k * k), add, mul, matrix_index(ident, q), 0, f"M({k},{R.label})")


def build_upper_triangular(k: int, R: FiniteRing) -> FiniteRing:
    """Upper-triangular k×k matrices, indexed in the order they occur in M_k(R)."""
    if k < 2:
        raise ValueError(f"UT(k, R) needs k >= 2, got {k}")
    slots = [i * k + j for i in range(k) for j in range(i, k)]
    check_order(R.order ** len(slots), "upper-triangular ring order")
    return _upper(k, normalized(R))


@lru_cache(maxsize=None)
def _upper(k: int, R: FiniteRing) -> FiniteRing:
    q = R.order
    slots = [i * k + j for i in range(k) for j in range(i, k)]
    n = q ** len(slots)
    idx = np.arange(n, dtype=np.int64)
    rows = np.stack([(idx // q ** (len(slots) - 1 - s)) % q for s in range(len(slots))], axis=1)
    add_d, mul_d = _matrix_tables(R, rows, k, slots)
    weights = q ** np.arange(len(slots) - 1, -1, -1, dtype=np.int64)
    add = (add_d[..., slots] * weights).sum(axis=-1)
    mul = (mul_d[..., slots] * weights).sum(axis=-1)
    ident = [R.one if i == j else 0 for i in range(k) for j in range(i, k)]
    return FiniteRing(n, add, mul, matrix_index(ident, q), 0, f"UT({k},{R.label})")


# -- products and opposites --------------------------------------------------


def build_product(parts: Sequence[FiniteRing]) -> FiniteRing:
    """Direct product; element (a, b, ...) has index a·|B|·... + b·... (first factor most significant)."""
    parts = list(parts)
    if len(parts) < 2:
        raise ValueError("prod(...) needs at least two factors")
    check_order(int(np.prod([P.order for P in parts], dtype=object)), "product ring order")
    return _product(tuple(normalized(P) for P in parts))


@lru_cache(maxsize=None)
def _product(parts: tuple[FiniteRing, ...]) -> FiniteRing:
    acc = parts[0]
    for P in parts[1:]:
        acc = _pair(acc, P)
    label = "prod(" + ",".join(P.label for P in parts) + ")"
    return FiniteRing(acc.order, acc.add, acc.mul, acc.one, 0, label)


def _pair(A: FiniteRing, B: FiniteRing) -> FiniteRing:
    na, nb = A.order, B.order
    a = np.repeat(np.arange(na), nb)
    b = np.tile(np.arange(nb), na)
    add = A.add[np.ix_(a, a)].astype(np.int64) * nb + B.add[np.ix_(b, b)]
    mul = A.mul[np.ix_(a, a)].astype(np.int64) * nb + B.mul[np.ix_(b, b)]
    return FiniteRing(na * nb, add, mul, A.one * nb + B.one, 0, f"prod({A.label},{B.label})")


def pair_index(B_order: int, a: int, b: int) -> int:
    return a * B_order + b


def build_opposite(R: FiniteRing) -> FiniteRing:
    return FiniteRing(R.order, R.add, R.mul.T, R.one, R.zero, f"op({R.label})")


# -- quotients and subrings --------------------------------------------------


def quotient(R: FiniteRing, I: Subset) -> tuple[FiniteRing, RingMap]:
    """R/I with each coset named by its smallest element.

    Cosets are numbered with I itself first, then by increasing representative.
    """
    arr = I.array
    if not (is_left_ideal_array(R, arr) and is_right_ideal_array(R, arr)):
        raise ValueError("quotient needs a two-sided ideal")
    if I.is_whole:
        raise ValueError("quotient by the whole ring is the zero ring")
    idx = I.indices
    reps = R.add[:, idx].min(axis=1)
    distinct = sorted(set(reps.tolist()), key=lambda r: (r != reps[R.zero], r))
    number = {r: i for i, r in enumerate(distinct)}
    coset = np.array([number[r] for r in reps.tolist()], dtype=np.int64)
    rep = np.array(distinct, dtype=np.int64)
    add = coset[R.add[np.ix_(rep, rep)]]
    mul = coset[R.mul[np.ix_(rep, rep)]]
    Q = FiniteRing(len(rep), add, mul, int(coset[R.one]), 0, f"{R.label}/I{len(I)}")
    return Q, RingMap(R, Q, tuple(coset.tolist()), True, False)


def subring_as_ring(R: FiniteRing, S: Subset, label: str | None = None) -> tuple[FiniteRing, RingMap]:
    """Re-index a unital subring densely (zero first, then increasing index)."""
    if not is_subring_array(R, S.array):
        raise ValueError("not a unital subring")
    members = sorted(S.members, key=lambda x: (x != R.zero, x))
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    m = np.array(members, dtype=np.int64)
    add = pos[R.add[np.ix_(m, m)]]
    mul = pos[R.mul[np.ix_(m, m)]]
    sub = FiniteRing(len(members), add, mul, int(pos[R.one]), 0, label or f"{R.label}|S{len(members)}")
    return sub, make_map(sub, R, members)


# -- JSON ring files ---------------------------------------------------------


def ring_to_dict(R: FiniteRing) -> dict:
    return {
        "order": R.order,
        "one": R.one,
        "add": R.add.tolist(),
        "mul": R.mul.tolist(),
        "label": R.label,
    }


def ring_from_dict(data: dict) -> FiniteRing:
    try:
        order, one, add, mul = data["order"], data["one"], data["add"], data["mul"]
    except KeyError as exc:
        raise ValueError(f"ring file missing field {exc.args[0]!r}") from None
    check_order(int(order))
    return validate_tables(int(order), np.asarray(add), np.asarray(mul), int(one), str(data.get("label", "file")))


def load_ring(path: str | Path) -> FiniteRing:
    with open(path) as fh:
        return ring_from_dict(json.load(fh))


def save_ring(R: FiniteRing, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(ring_to_dict(R), fh)
