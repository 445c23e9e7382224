"""Executable checks of structural facts about maximal ideals and maximal subrings.

Every check returns a list of :class:`CheckResult`. A check passes only
after at least one instantiated assertion; with nothing to assert it is
recorded as ``not-applicable``. Cap overruns become ``skipped-cap`` entries
naming the exhausted resource.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import construct
from .ideals import (
    annihilator,
    colon,
    eigenring,
    eigenring_order,
    enumerate_ideals,
    idealizer,
    is_quasi_duo,
    max_partition_report,
    maximal_ideals,
    similar_to,
    transpose_ideal,
    d_ideal,
)
from .iso import find_isomorphism
from .limits import ResourceLimitError, limits
from .ring import FiniteRing, RingAxiomError, Subset, center, is_field, validate
from .spec import GF, Mat, Prod, Spec, SpecError, Z, build, parse_spec
from .subrings import (
    catalog_maxsub_product_simple,
    delta_subring,
    diagonal,
    enumerate_subrings,
    find_maximal_subring,
    homomorphically_non_isomorphic,
    identify_simple_ring,
    is_maximal_subring,
    is_simple,
    maximal_subrings,
    parallel_classes,
    split_components,
    split_maxsub,
    vectors_outside,
)

PASS, FAIL, SKIPPED_CAP, NOT_APPLICABLE = "pass", "fail", "skipped-cap", "not-applicable"


@dataclass
class CheckResult:
    check_id: str
    status: str
    witness: Any = None
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self, timings: bool = True) -> dict:
        out = {"id": self.check_id, "status": self.status, "detail": self.detail, "witness": self.witness}
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class VerificationReport:
    ring_label: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def status_of(self, check_id: str) -> str:
        return next(c.status for c in self.checks if c.check_id == check_id)

    def to_dict(self, timings: bool = True) -> dict:
        return {"ring": self.ring_label, "checks": [c.to_dict(timings) for c in self.checks]}


class _Check:
    """Collects the assertions of one check and appends a single result to ``out``."""

    def __init__(self, check_id: str, out: list[CheckResult]):
        self.check_id = check_id
        self.out = out
        self.count = 0
        self.witness: Any = None
        self.failed = False
        self.detail = ""
        self.na_reason: str | None = None

    def __enter__(self) -> "_Check":
        self.start = time.perf_counter()
        return self

    def expect(self, condition: bool, witness: Any = None) -> bool:
        self.count += 1
        if not condition and not self.failed:
            self.failed = True
            self.witness = witness
        return bool(condition)

    def not_applicable(self, reason: str) -> None:
        self.na_reason = reason

    def __exit__(self, exc_type, exc, tb) -> bool:
        elapsed = time.perf_counter() - self.start
        if exc_type is not None and issubclass(exc_type, ResourceLimitError):
            witness = {"resource": exc.resource, "limit": exc.limit, "needed": exc.needed}
            self.out.append(CheckResult(self.check_id, SKIPPED_CAP, witness, str(exc), elapsed))
            return True
        if exc_type is not None:
            return False
        if self.failed:
            status = FAIL
        elif self.count == 0:
            status = NOT_APPLICABLE
            self.detail = self.na_reason or self.detail or "nothing to check"
        else:
            status = PASS
        self.out.append(CheckResult(self.check_id, status, self.witness, self.detail, elapsed))
        return False


def members(S: Subset) -> list[int]:
    return list(S.members)


def _two_sided_masks(R: FiniteRing) -> set[int]:
    return {I.mask for I in enumerate_ideals(R, "two-sided")}


def non_two_sided_maximal(R: FiniteRing, side: str) -> list[Subset]:
    two = _two_sided_masks(R)
    return [M for M in maximal_ideals(R, side) if M.mask not in two]


def _coset_reps_in(R: FiniteRing, big: Subset, small: Subset) -> list[int]:
    """One representative per coset of ``small`` inside ``big`` (additive)."""
    covered = np.zeros(R.order, dtype=bool)
    idx = small.indices
    reps = []
    for c in big.members:
        if not covered[c]:
            reps.append(c)
            covered[R.add[c, idx]] = True
    return reps


# -- similarity classes and eigenrings ---------------------------------------


def check_similarity_bound(R: FiniteRing) -> list[CheckResult]:
    """|[M]| >= |I(M)/M| + 1 for maximal one-sided ideals that are not two-sided.

    Also replays the injection c + M -> (M : x + c) from the eigenring into
    [M] minus M, and that such ideals come at least three at a time.
    """
    out: list[CheckResult] = []
    for side in ("left", "right"):
        with _Check(f"similarity_bound.{side}", out) as c:
            primes = non_two_sided_maximal(R, side)
            if not primes:
                c.not_applicable(f"{side} quasi-duo")
            sizes = []
            for M in primes:
                cls = similar_to(R, M, side)
                e = eigenring_order(R, M)
                sizes.append((len(cls), e))
                c.expect(len(cls) >= e + 1, {"ideal": members(M), "class_size": len(cls), "eigenring_order": e})
                I = idealizer(R, M)
                x = next(t for t in range(R.order) if t not in I)
                reps = _coset_reps_in(R, I, M)
                images = [colon(R, M, int(R.add[x, r]), side).mask for r in reps]
                in_class = {N.mask for N in cls} - {M.mask}
                c.expect(
                    len(reps) == e and len(set(images)) == len(reps) and set(images) <= in_class,
                    {"ideal": members(M), "outside_element": x, "representatives": reps},
                )
            if primes:
                c.expect(len(primes) >= 3, {"count": len(primes)})
                c.detail = f"{len(primes)} ideals; (class size, eigenring order) = {sorted(set(sizes))}"
    return out


# -- idealizers as maximal subrings ------------------------------------------


def check_idealizer_maximality(R: FiniteRing, matrix_size: int | None = None) -> list[CheckResult]:
    """Idealizers of non-two-sided maximal one-sided ideals are maximal subrings,
    and are the only maximal subrings containing those ideals."""
    out: list[CheckResult] = []
    primes = [(s, M) for s in ("left", "right") for M in non_two_sided_maximal(R, s)]
    with _Check("idealizer_is_maximal", out) as c:
        if not primes:
            c.not_applicable("quasi-duo ring")
        for side, A in primes:
            S = idealizer(R, A)
            c.expect(is_maximal_subring(R, S), {"side": side, "ideal": members(A), "idealizer": members(S)})
        if primes:
            c.detail = f"{len(primes)} idealizers checked"
    with _Check("maximal_over_ideal_is_idealizer", out) as c:
        if not primes:
            c.not_applicable("quasi-duo ring")
        for side, A in primes:
            S = idealizer(R, A)
            above = maximal_subrings(R, base=A)
            c.expect(
                [T.mask for T in above] == [S.mask],
                {"side": side, "ideal": members(A), "maximal_subrings_over_ideal": [members(T) for T in above]},
            )
    with _Check("maxsub_or_quasi_duo", out) as c:
        found = find_maximal_subring(R)
        qd = is_quasi_duo(R, "left") and is_quasi_duo(R, "right")
        c.expect(found is not None or qd, {"quasi_duo": qd})
        branches = [b for b, ok in (("maximal subring", found is not None), ("quasi-duo", qd)) if ok]
        c.detail = " and ".join(branches) or "neither"
    with _Check("matrix_ring_has_maxsub", out) as c:
        if not matrix_size or matrix_size < 2:
            c.not_applicable("not presented as a matrix ring of size > 1")
        else:
            found = find_maximal_subring(R)
            c.expect(found is not None, None)
            if found is not None:
                c.detail = f"maximal subring of order {len(found)}"
    return out


# -- R × R for simple R -------------------------------------------------------


def check_simple_square(R: FiniteRing) -> list[CheckResult]:
    """Maximal subrings of R×R (R simple) are exactly the splits and twisted diagonals."""
    out: list[CheckResult] = []
    with _Check("simple_square_catalog", out) as c:
        if not is_simple(R):
            c.not_applicable("ring is not simple")
        else:
            P = construct.build_product([R, R])
            catalog = catalog_maxsub_product_simple(R)
            enumerated = maximal_subrings(P)
            cat, enu = {S.mask for S in catalog}, {S.mask for S in enumerated}
            c.expect(
                cat == enu,
                {
                    "catalog_only": [members(S) for S in catalog if S.mask not in enu],
                    "enumerated_only": [members(S) for S in enumerated if S.mask not in cat],
                },
            )
            diagonals = 0
            for S in catalog:
                c.expect(is_maximal_subring(P, S), {"not_maximal": members(S)})
                if split_components(R, R, S) is None:
                    diagonals += 1
                    sub, _ = construct.subring_as_ring(P, S)
                    c.expect(find_isomorphism(sub, R) is not None, {"diagonal_not_isomorphic": members(S)})
            c.detail = f"{len(catalog)} catalog = {len(enumerated)} enumerated; {diagonals} twisted diagonals"
    return out


def check_diagonal_overrings(R: FiniteRing) -> list[CheckResult]:
    """Subrings of R×R containing the diagonal are the Δ(I), maximal exactly for maximal I."""
    out: list[CheckResult] = []
    with _Check("diagonal_overrings", out) as c:
        construct.build_product([R, R])
        D = diagonal(R)
        P = D.parent
        lattice = enumerate_subrings(P, base=D)
        if lattice.truncated:
            raise ResourceLimitError("subring count", len(lattice.subrings))
        ideals = enumerate_ideals(R, "two-sided")
        maximal_ideal_masks = {I.mask for I in maximal_ideals(R, "two-sided")}
        built = {delta_subring(R, I).mask: I for I in ideals}
        found = {S.mask for S in lattice.subrings}
        c.expect(
            set(built) == found and len(built) == len(ideals),
            {"from_ideals": len(built), "over_diagonal": len(found)},
        )
        maximal = {lattice.subrings[i].mask for i in lattice.maximal}
        for mask, I in built.items():
            c.expect((mask in maximal) == (I.mask in maximal_ideal_masks), {"ideal": members(I)})
        c.expect((D.mask in maximal) == is_simple(R), {"diagonal_maximal": D.mask in maximal})
        c.detail = f"{len(found)} subrings over the diagonal, {len(maximal)} maximal"
    return out


def check_product_split(A: FiniteRing, B: FiniteRing) -> list[CheckResult]:
    """For A, B without isomorphic proper quotients, maximal subrings of A×B split."""
    out: list[CheckResult] = []
    with _Check("product_split", out) as c:
        if not homomorphically_non_isomorphic(A, B):
            c.not_applicable("factors share an isomorphic proper quotient")
        else:
            P = construct.build_product([A, B])
            catalog = split_maxsub(A, B)
            enumerated = maximal_subrings(P)
            cat, enu = {S.mask for S in catalog}, {S.mask for S in enumerated}
            c.expect(
                cat == enu,
                {
                    "catalog_only": [members(S) for S in catalog if S.mask not in enu],
                    "enumerated_only": [members(S) for S in enumerated if S.mask not in cat],
                },
            )
            c.detail = f"{len(catalog)} splits = {len(enumerated)} enumerated"
    return out


# -- consequences of having finitely many maximal subrings ----------------------


def check_finite_maxsub_consequences(R: FiniteRing) -> list[CheckResult]:
    """Finite-ring instances of the structure forced by finitely many maximal subrings."""
    out: list[CheckResult] = []
    rep = max_partition_report(R)
    primes = [("left", M) for M in rep.maxl_prime] + [("right", M) for M in rep.maxr_prime]

    with _Check("one_sided_idealizers_inject", out) as c:
        if not primes:
            c.not_applicable("quasi-duo ring")
        for side in ("left", "right"):
            ideals = [M for s, M in primes if s == side]
            subs = [idealizer(R, M) for M in ideals]
            c.expect(len({S.mask for S in subs}) == len(ideals), {"side": side}) if ideals else None
            for M, S in zip(ideals, subs):
                c.expect(is_maximal_subring(R, S), {"side": side, "ideal": members(M)})

    with _Check("eigenrings_are_fields", out) as c:
        for side, ideals in (("left", rep.maxl), ("right", rep.maxr)):
            for M in ideals:
                E = eigenring(R, M)
                c.expect(is_field(E), {"side": side, "ideal": members(M), "eigenring_order": E.order})

    with _Check("center_residue_fields", out) as c:
        if not primes:
            c.not_applicable("quasi-duo ring")
        C = center(R)
        C_ring, embed = construct.subring_as_ring(R, C)
        for side, M in primes:
            inside = C_ring.subset(i for i, x in enumerate(embed.image) if x in M)
            Q, _ = construct.quotient(C_ring, inside)
            c.expect(is_field(Q), {"side": side, "ideal": members(M)})

    with _Check("simple_quotient_centers", out) as c:
        c.not_applicable("finite division rings are fields, so the statement holds trivially")

    with _Check("non_left_maximal_quotients_are_matrix_rings", out) as c:
        if not rep.max_prime:
            c.not_applicable("every maximal ideal is a maximal left ideal")
        found = []
        for N in rep.max_prime:
            Q, _ = construct.quotient(R, N)
            ident = identify_simple_ring(Q)
            found.append(ident)
            c.expect(
                ident is not None and ident[0] > 1 and not Q.is_commutative,
                {"ideal": members(N), "identified": ident},
            )
        if found:
            c.detail = f"quotients identified as M_n(GF(q)) with (n, q) in {sorted(set(f for f in found if f))}"

    with _Check("non_left_maximal_ideals_in_maxsubs", out) as c:
        if not rep.max_prime:
            c.not_applicable("every maximal ideal is a maximal left ideal")
        subs = []
        for N in rep.max_prime:
            S = find_maximal_subring(R, base=N)
            c.expect(S is not None, {"ideal": members(N)})
            if S is not None:
                subs.append(S.mask)
        if rep.max_prime:
            c.expect(len(set(subs)) == len(rep.max_prime), {"distinct_subrings": len(set(subs))})

    masks = lambda xs: {x.mask for x in xs}  # noqa: E731
    with _Check("primitive_equals_maximal", out) as c:
        c.expect(masks(rep.prml) == masks(rep.max), {"prml": [members(P) for P in rep.prml]})
        c.expect(masks(rep.prmr) == masks(rep.max), {"prmr": [members(P) for P in rep.prmr]})
        c.detail = f"{len(rep.max)} maximal ideals"

    with _Check("primitive_ideals_maximal", out) as c:
        for side in ("left", "right"):
            for M in rep.maxl if side == "left" else rep.maxr:
                P = annihilator(R, M, side)
                c.expect(P.mask in masks(rep.max), {"side": side, "ideal": members(M), "annihilator": members(P)})

    with _Check("radical_is_max_intersection", out) as c:
        inter = (1 << R.order) - 1
        for M in rep.max:
            inter &= M.mask
        c.expect(rep.j.mask == inter, {"j": members(rep.j)})
        c.expect(rep.j.mask & rep.j_prime.mask == rep.j.mask, {"j_prime": members(rep.j_prime)})
        c.detail = f"|J| = {len(rep.j)}"

    with _Check("max_set_identities", out) as c:
        l, r, m, lr = masks(rep.maxl), masks(rep.maxr), masks(rep.max), masks(rep.max_lr)
        c.expect(lr == l & m == r & m == l & r, {"sizes": [len(lr), len(l & m), len(r & m), len(l & r)]})
        c.expect(m - l == m - r, {"max_minus_maxl": len(m - l), "max_minus_maxr": len(m - r)})
        c.detail = f"|Max_lr| = {len(lr)}, |Max'| = {len(m - l)}"
    return out


def check_prime_absorption(R: FiniteRing) -> list[CheckResult]:
    """Each M in Maxl'∪Maxr'∪Max' contains p·1 for some prime p."""
    out: list[CheckResult] = []
    with _Check("prime_absorption", out) as c:
        rep = max_partition_report(R)
        targets = list(rep.maxl_prime) + list(rep.maxr_prime) + list(rep.max_prime)
        if not targets:
            c.not_applicable("all maximal one-sided ideals are two-sided and all maximal ideals are maximal left ideals")
        primes_used = set()
        char = R.characteristic
        candidates = [p for p in range(2, char + 1) if char % p == 0 and all(p % d for d in range(2, p))]
        for M in targets:
            hit = next((p for p in candidates if R.multiple(p, R.one) in M), None)
            c.expect(hit is not None, {"ideal": members(M)})
            if hit is not None:
                primes_used.add(hit)
        if targets:
            c.detail = f"{len(targets)} ideals, primes {sorted(primes_used)}"
    return out


def check_field_matrix_product(parts: Sequence[tuple[int, int]]) -> list[CheckResult]:
    """T = (fields) × (matrix rings over fields): maximal subrings split as A×B1 or A1×B."""
    out: list[CheckResult] = []
    with _Check("field_matrix_product_split", out) as c:
        fields = [construct.build_field(q) for n, q in parts if n == 1]
        mats = [construct.build_matrix(n, construct.build_field(q)) for n, q in parts if n > 1]
        if not fields or not mats:
            c.not_applicable("needs both a field factor and a matrix factor")
        else:
            A = fields[0] if len(fields) == 1 else construct.build_product(fields)
            B = mats[0] if len(mats) == 1 else construct.build_product(mats)
            T = construct.build_product([A, B])
            enumerated = maximal_subrings(T)
            for S in enumerated:
                c.expect(split_components(A, B, S) is not None, {"unsplit": members(S)})
            expected = len(maximal_subrings(A)) + len(maximal_subrings(B))
            c.expect(len(enumerated) == expected, {"enumerated": len(enumerated), "expected": expected})
            c.detail = f"{len(enumerated)} maximal subrings, all split"
    return out


# -- maximal left ideals of matrix rings --------------------------------------


def check_matrix_left_ideals(base: FiniteRing, n: int) -> list[CheckResult]:
    """Maxl(M_n(R)) = {D(M,u)}, the D(M,u) equality criterion, and the transpose bijection."""
    out: list[CheckResult] = []
    base = construct.normalized(base)
    T = construct.build_matrix(n, base)
    with _Check("matrix_maxl_coverage", out) as c:
        produced: dict[int, Subset] = {}
        for M in maximal_ideals(base, "left"):
            for u in vectors_outside(base, M, n):
                D = d_ideal(base, M, u, n)
                produced.setdefault(D.mask, D)
        actual = {N.mask for N in maximal_ideals(T, "left")}
        c.expect(set(produced) == actual, {"produced": len(produced), "actual": len(actual)})
        c.detail = f"{len(actual)} maximal left ideals"
    with _Check("matrix_maxl_equality", out) as c:
        # D(M,u) = D(M,v) iff v ≡ uc mod M for some c in I(M) outside M
        for M in maximal_ideals(base, "left"):
            S = idealizer(base, M)
            units_mod = [x for x in S.members if x not in M]
            vecs = [u for u in vectors_outside(base, M, n) if all(x in S for x in u)]
            ideals = {u: d_ideal(base, M, u, n).mask for u in vecs}
            for u in vecs:
                for v in vecs:
                    related = any(
                        all(int(base.add[v[i], base.neg[base.mul[u[i], cc]]]) in M for i in range(n))
                        for cc in units_mod
                    )
                    c.expect((ideals[u] == ideals[v]) == related, {"u": list(u), "v": list(v)})
            if M.mask == 1 << base.zero:
                classes = {ideals[u] for u in vecs}
                if is_field(base):
                    lines = parallel_classes(base, n)
                    c.expect(len(classes) == len(lines), {"ideals": len(classes), "parallel_classes": len(lines)})
                c.detail = f"{len(classes)} ideals D(0,u)"
    with _Check("transpose_bijection", out) as c:
        if not base.is_commutative or n < 2:
            c.not_applicable("needs a commutative base and n > 1")
        else:
            maxl = maximal_ideals(T, "left")
            maxr = {M.mask for M in maximal_ideals(T, "right")}
            images = [transpose_ideal(base, n, M).mask for M in maxl]
            c.expect(len(set(images)) == len(maxl) and set(images) == maxr, {"left": len(maxl), "right": len(maxr)})
            c.expect(not ({M.mask for M in maxl} & _two_sided_masks(T)), None)
    return out


# -- statements that only have content for infinite rings ---------------------

INFINITE_ONLY = (
    ("infinite_base_field_algebras", "needs an algebra over an infinite field"),
    ("infinite_division_rings", "needs an infinite division ring"),
    ("uncountable_rings", "needs rings of uncountable cardinality"),
    ("infinite_products", "needs an infinite direct product"),
    ("infinite_artinian_rings", "needs an infinite Artinian ring"),
)


def infinite_only_entries() -> list[CheckResult]:
    return [CheckResult(cid, NOT_APPLICABLE, None, reason, 0.0) for cid, reason in INFINITE_ONLY]


# -- zoo driver ----------------------------------------------------------------

DEFAULT_ZOO = (
    "Z(2)", "Z(3)", "Z(4)", "Z(6)", "Z(8)", "Z(9)", "Z(12)",
    "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)",
    "M(2,GF(2))", "M(2,GF(3))", "M(2,Z(4))",
    "UT(2,GF(2))", "UT(2,GF(3))",
    "prod(Z(2),Z(2))", "prod(Z(3),Z(3))", "prod(GF(4),GF(4))", "prod(Z(4),Z(9))",
    "prod(GF(4),M(2,GF(2)))", "prod(M(2,GF(2)),M(2,GF(2)))",
)

CHECK_GROUPS = (
    "similarity",
    "idealizer",
    "simple_square",
    "diagonal",
    "product_split",
    "consequences",
    "prime_absorption",
    "field_matrix_product",
    "matrix_left_ideals",
)


@dataclass
class ZooConfig:
    rings: Sequence[str] = DEFAULT_ZOO
    checks: Sequence[str] | None = None  # None means every group
    max_order: int | None = None
    max_ideals: int | None = None
    max_subrings: int | None = None
    include_infinite_only: bool = True

    @classmethod
    def from_dict(cls, data: dict) -> "ZooConfig":
        caps = data.get("caps", {})
        checks = data.get("checks")
        if checks == "all":
            checks = None
        return cls(
            rings=tuple(data.get("rings", DEFAULT_ZOO)),
            checks=checks,
            max_order=caps.get("max_order"),
            max_ideals=caps.get("max_ideals"),
            max_subrings=caps.get("max_subrings"),
            include_infinite_only=data.get("include_infinite_only", True),
        )


def _field_matrix_parts(spec: Spec) -> list[tuple[int, int]] | None:
    def one(s: Spec) -> tuple[int, int] | None:
        if isinstance(s, GF):
            return (1, s.q)
        if isinstance(s, Z) and construct.prime_power(s.n) and construct.prime_power(s.n)[1] == 1:
            return (1, s.n)
        if isinstance(s, Mat):
            inner = one(s.base)
            if inner and inner[0] == 1:
                return (s.k, inner[1])
        return None

    parts = spec.parts if isinstance(spec, Prod) else (spec,)
    found = [one(p) for p in parts]
    return None if any(f is None for f in found) else found  # type: ignore[return-value]


def verify_ring(R: FiniteRing, spec: Spec | None = None, groups: Iterable[str] | None = None) -> VerificationReport:
    """Run every applicable check group on R; ``spec`` supplies structure (factors, matrix base)."""
    wanted = set(CHECK_GROUPS if groups is None else groups)
    unknown = wanted - set(CHECK_GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    report = VerificationReport(R.label)
    add = report.checks.extend

    def guarded(check_id: str, fn: Callable[[], list[CheckResult]]) -> None:
        start = time.perf_counter()
        try:
            add(fn())
        except ResourceLimitError as exc:
            witness = {"resource": exc.resource, "limit": exc.limit, "needed": exc.needed}
            add([CheckResult(check_id, SKIPPED_CAP, witness, str(exc), time.perf_counter() - start)])

    matrix_size = spec.k if isinstance(spec, Mat) else None
    if "similarity" in wanted:
        guarded("similarity_bound", lambda: check_similarity_bound(R))
    if "idealizer" in wanted:
        guarded("idealizer_is_maximal", lambda: check_idealizer_maximality(R, matrix_size))
    if "simple_square" in wanted:
        guarded("simple_square_catalog", lambda: check_simple_square(R))
    if "diagonal" in wanted:
        guarded("diagonal_overrings", lambda: check_diagonal_overrings(R))
    if "product_split" in wanted:
        if isinstance(spec, Prod) and len(spec.parts) == 2:
            A, B = build(spec.parts[0]), build(spec.parts[1])
            guarded("product_split", lambda: check_product_split(A, B))
        else:
            add([CheckResult("product_split", NOT_APPLICABLE, None, "not presented as a product of two rings")])
    if "consequences" in wanted:
        guarded("finite_maxsub_consequences", lambda: check_finite_maxsub_consequences(R))
    if "prime_absorption" in wanted:
        guarded("prime_absorption", lambda: check_prime_absorption(R))
    if "field_matrix_product" in wanted:
        parts = _field_matrix_parts(spec) if spec is not None else None
        if parts is None:
            add([CheckResult("field_matrix_product_split", NOT_APPLICABLE, None, "not a product of fields and matrix rings over fields")])
        else:
            guarded("field_matrix_product_split", lambda: check_field_matrix_product(parts))
    if "matrix_left_ideals" in wanted:
        if isinstance(spec, Mat) and spec.k >= 2:
            base = build(spec.base)
            guarded("matrix_maxl_coverage", lambda: check_matrix_left_ideals(base, spec.k))
        else:
            add([CheckResult("matrix_maxl_coverage", NOT_APPLICABLE, None, "not presented as a matrix ring of size > 1")])
    return report


def verify_spec(text: str, groups: Iterable[str] | None = None, include_infinite_only: bool = False) -> VerificationReport:
    """Parse, build, validate and verify one ring; input problems become report entries."""
    report = VerificationReport(text)
    start = time.perf_counter()
    try:
        spec = parse_spec(text)
        R = build(spec)
    except ResourceLimitError as exc:
        witness = {"resource": exc.resource, "limit": exc.limit, "needed": exc.needed}
        report.checks.append(CheckResult("build", SKIPPED_CAP, witness, str(exc), time.perf_counter() - start))
        return report
    except RingAxiomError as exc:
        report.checks.append(CheckResult("validate", FAIL, {"axiom": exc.axiom, "elements": list(exc.witness)}, str(exc), time.perf_counter() - start))
        return report
    except (SpecError, OSError, ValueError) as exc:
        report.checks.append(CheckResult("parse", FAIL, None, str(exc), time.perf_counter() - start))
        return report
    try:
        validate(R)
    except RingAxiomError as exc:
        report.checks.append(CheckResult("validate", FAIL, {"axiom": exc.axiom, "elements": list(exc.witness)}, str(exc), time.perf_counter() - start))
        return report
    report.checks.append(CheckResult("validate", PASS, None, f"order {R.order}", time.perf_counter() - start))
    report.checks.extend(verify_ring(R, spec, groups).checks)
    if include_infinite_only:
        report.checks.extend(infinite_only_entries())
    return report


def run_zoo(config: ZooConfig | dict | None = None) -> list[VerificationReport]:
    """Verify every ring of the zoo in order; failures are data, never exceptions."""
    if config is None:
        config = ZooConfig()
    elif isinstance(config, dict):
        config = ZooConfig.from_dict(config)
    with limits(max_order=config.max_order, max_ideals=config.max_ideals, max_subrings=config.max_subrings):
        return [
            verify_spec(text, config.checks, config.include_infinite_only)
            for text in config.rings
        ]
