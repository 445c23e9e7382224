"""Isomorphism and automorphism search by backtracking over generator images."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .ring import FiniteRing, RingMap, make_map

ADD, MUL = 0, 1


@dataclass(frozen=True)
class GenerationProgram:
    """How to rebuild every element of a ring from its generators.

    ``steps`` is a straight-line program of ``(target, op, a, b)``; after the
    ``i``-th generator is adjoined, ``cuts[i]`` steps have run and
    ``domains[i]`` (the subring generated so far) is fully determined.
    """

    generators: tuple[int, ...]
    steps: tuple[tuple[int, int, int, int], ...]
    cuts: tuple[int, ...]
    domains: tuple[np.ndarray, ...]
    base_steps: int
    base_domain: np.ndarray


@lru_cache(maxsize=64)
def generation_program(R: FiniteRing) -> GenerationProgram:
    """Greedy generators: repeatedly adjoin the smallest element not yet generated."""
    add, mul = R.add, R.mul
    known: list[int] = [R.one]
    seen = {R.one}
    steps: list[tuple[int, int, int, int]] = []

    def close(frontier: list[int]) -> None:
        while frontier:
            nxt: list[int] = []
            for x in frontier:
                for y in list(known):
                    for op, table, a, b in ((ADD, add, x, y), (MUL, mul, x, y), (MUL, mul, y, x)):
                        z = int(table[a, b])
                        if z not in seen:
                            seen.add(z)
                            known.append(z)
                            steps.append((z, op, a, b))
                            nxt.append(z)
            frontier = nxt

    close([R.one])
    base_steps = len(steps)
    base_domain = np.array(sorted(seen), dtype=np.int64)
    gens: list[int] = []
    cuts: list[int] = []
    domains: list[np.ndarray] = []
    while len(seen) < R.order:
        g = next(x for x in range(R.order) if x not in seen)
        gens.append(g)
        seen.add(g)
        known.append(g)
        close([g])
        cuts.append(len(steps))
        domains.append(np.array(sorted(seen), dtype=np.int64))
    return GenerationProgram(tuple(gens), tuple(steps), tuple(cuts), tuple(domains), base_steps, base_domain)


def invariants(R: FiniteRing) -> tuple:
    """Cheap whole-ring invariants that any isomorphism must preserve."""
    return (
        R.order,
        R.characteristic,
        R.is_commutative,
        tuple(sorted(Counter(R.additive_orders.tolist()).items())),
        R.unit_mask.bit_count(),
        R.nilpotent_mask.bit_count(),
        tuple(sorted(Counter(R.element_signature).items())),
    )


def _consistent(R: FiniteRing, S: FiniteRing, f: np.ndarray, dom: np.ndarray) -> bool:
    img = f[dom]
    if len(set(img.tolist())) != dom.size:
        return False
    if not np.array_equal(f[R.add[np.ix_(dom, dom)]], S.add[np.ix_(img, img)]):
        return False
    return bool(np.array_equal(f[R.mul[np.ix_(dom, dom)]], S.mul[np.ix_(img, img)]))


def _run(prog: GenerationProgram, f: np.ndarray, S: FiniteRing, start: int, stop: int) -> None:
    for z, op, a, b in prog.steps[start:stop]:
        table = S.add if op == ADD else S.mul
        f[z] = table[f[a], f[b]]


def iter_isomorphisms(R: FiniteRing, S: FiniteRing) -> Iterator[RingMap]:
    """Yield every ring isomorphism R -> S, in a deterministic order."""
    if invariants(R) != invariants(S):
        return
    prog = generation_program(R)
    f = np.full(R.order, -1, dtype=np.int64)
    f[R.one] = S.one
    _run(prog, f, S, 0, prog.base_steps)
    if not _consistent(R, S, f, prog.base_domain):
        return
    sig_r, sig_s = R.element_signature, S.element_signature
    by_sig: dict[tuple, list[int]] = {}
    for y in range(S.order):
        by_sig.setdefault(sig_s[y], []).append(y)

    def extend(i: int) -> Iterator[np.ndarray]:
        if i == len(prog.generators):
            yield f
            return
        g = prog.generators[i]
        start = prog.cuts[i - 1] if i else prog.base_steps
        prev = prog.domains[i - 1] if i else prog.base_domain
        dom = prog.domains[i]
        used = set(f[prev].tolist())
        snapshot = f.copy()
        for h in by_sig.get(sig_r[g], ()):
            if h in used:
                continue
            f[g] = h
            _run(prog, f, S, start, prog.cuts[i])
            if all(sig_s[v] == sig_r[x] for x, v in zip(dom.tolist(), f[dom].tolist())) and _consistent(R, S, f, dom):
                yield from extend(i + 1)
            f[:] = snapshot

    for found in extend(0):
        m = make_map(R, S, found.tolist())
        if m.is_isomorphism:
            yield m


def find_isomorphism(R: FiniteRing, S: FiniteRing) -> RingMap | None:
    """First isomorphism R -> S found by the search, or None."""
    return next(iter_isomorphisms(R, S), None)


def are_isomorphic(R: FiniteRing, S: FiniteRing) -> bool:
    return find_isomorphism(R, S) is not None
