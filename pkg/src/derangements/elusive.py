"""Prime-order conjugacy classes, derangements, and elusivity verdicts.

A transitive group is r-elusive when it has no fixed-point-free element of
order r.  Verdicts here are certified: each one records the method that
produced it (exhaustive-enumeration, class-coverage against a smaller
faithful parent action, backtrack search, or the structural wreath-product
criterion) together with the budgets in force, and NotElusive witnesses are
re-verified at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .classes import (
    fixed_point_counts,
    order_r_rows,
    partition_rows_by_conjugacy,
    _conjugacy_class,
)
from .config import DEFAULT_BUDGETS, DEFAULT_SEED, Budgets, BudgetExceeded
from .numbers import is_prime, prime_divisors
from .perm import Permutation, PermGroup, derangement_backtrack
from .zoo import GroupAction, WreathElement, WreathSpec

__all__ = [
    "ELUSIVE",
    "NOT_ELUSIVE",
    "NOT_APPLICABLE",
    "PROBABILISTIC",
    "ClassInfo",
    "ElusivityVerdict",
    "ElusivityReport",
    "SemiregularResult",
    "prime_order_class_reps",
    "action_prime_order_class_reps",
    "count_order_r_elements",
    "is_r_elusive",
    "is_2prime_elusive",
    "is_elusive",
    "wreath_fixed_point_check",
    "structural_wreath_elusivity",
    "wreath_prime_order_class_reps",
    "semiregular_search",
]

ELUSIVE = "Elusive"
NOT_ELUSIVE = "NotElusive"
NOT_APPLICABLE = "NotApplicable"
PROBABILISTIC = "Probabilistic"

METHOD_ENUM = "exhaustive-enumeration"
METHOD_COVER = "class-coverage"
METHOD_BACKTRACK = "backtrack"
METHOD_WREATH = "wreath-structural"


@dataclass
class ClassInfo:
    """One conjugacy class of prime-order elements."""

    representative: Union[Permutation, WreathElement]
    order: int
    class_size: int
    min_fixed_points: int
    exact: bool

    def __post_init__(self):
        if self.representative.order() != self.order:
            raise ValueError("representative order does not match the class order")


@dataclass
class ElusivityVerdict:
    prime: int
    status: str
    witness: Optional[Union[Permutation, WreathElement]] = None
    reason: Optional[str] = None
    method: Optional[str] = None
    budgets: dict = field(default_factory=dict)
    exact: bool = True
    spec: Optional[WreathSpec] = None

    def __post_init__(self):
        if self.status == NOT_ELUSIVE:
            w = self.witness
            if w is None:
                raise ValueError("NotElusive verdict needs a witness")
            if w.order() != self.prime:
                raise ValueError(f"witness order {w.order()} != {self.prime}")
            if isinstance(w, WreathElement):
                if wreath_fixed_point_check(w.spec, w):
                    raise ValueError("witness fixes a point")
            elif w.num_fixed() != 0:
                raise ValueError("witness fixes a point")

    def __bool__(self):
        return self.status == ELUSIVE

    def witness_cycles(self) -> Optional[str]:
        if self.witness is None:
            return None
        if isinstance(self.witness, WreathElement):
            return repr(self.witness)
        return self.witness.cycle_string()

    def to_dict(self) -> dict:
        out = {
            "r": self.prime,
            "status": self.status,
            "method": self.method,
            "exact": self.exact,
            "budgets": dict(self.budgets),
        }
        if self.witness is not None:
            out["witness_cycles"] = self.witness_cycles()
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class ElusivityReport:
    """Per-prime verdicts over the primes dividing the degree, aggregated."""

    kind: str  # "2'-elusive" or "elusive"
    degree: int
    verdicts: list
    aggregate: Optional[bool]
    reason: Optional[str] = None

    def __bool__(self):
        return bool(self.aggregate)

    @property
    def exact(self) -> bool:
        return all(v.exact for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "aggregate": self.aggregate,
            "reason": self.reason,
            "primes": [v.to_dict() for v in self.verdicts],
        }


# ---------------------------------------------------------------------------
# prime-order class representatives


def count_order_r_elements(G: PermGroup, r: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    return len(_order_r_rows_cached(G, r, budgets))


def _order_r_rows_cached(G: PermGroup, r: int, budgets: Budgets) -> np.ndarray:
    cache = getattr(G, "_order_r_rows_cache", None)
    if cache is None:
        cache = {}
        G._order_r_rows_cache = cache
    if r not in cache:
        cache[r] = order_r_rows(G, r, budgets.exhaustive)
    return cache[r]


def prime_order_class_reps(
    G: PermGroup,
    r: int,
    mode: str = "exhaustive",
    budgets: Budgets = DEFAULT_BUDGETS,
    seed: int = DEFAULT_SEED,
    expected_count: Optional[int] = None,
) -> list:
    """Conjugacy classes of order-r elements of G, as ClassInfo records.

    Exhaustive mode streams every element (order must fit the exhaustive
    budget) and buckets the order-r ones by conjugation BFS.  Sampled mode
    powers random elements down to order r and closes each new find under
    conjugation, stopping after budgets.sampled_misses consecutive draws
    that land in known classes; results are exact only when the summed
    class sizes match an independently supplied expected_count.
    """
    if not is_prime(r):
        raise ValueError(f"r={r} is not prime")
    cache = getattr(G, "_class_reps_cache", None)
    if cache is None:
        cache = {}
        G._class_reps_cache = cache
    key = (r, mode)
    if key in cache:
        return cache[key]
    if mode == "exhaustive":
        infos = _exhaustive_class_reps(G, r, budgets)
    elif mode == "sampled":
        infos = _sampled_class_reps(G, r, budgets, seed, expected_count)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cache[key] = infos
    return infos


def _class_infos_from_rows(G: PermGroup, r: int, rows: np.ndarray, exact: bool) -> list:
    order = G.order()
    counts = fixed_point_counts(rows)
    infos = []
    for rep_row, members in partition_rows_by_conjugacy(G, rows):
        cls_counts = counts[members]
        if cls_counts.min() != cls_counts.max():
            raise AssertionError("fixed-point count varies inside a conjugacy class")
        size = len(members)
        if order % size != 0:
            raise AssertionError("class size does not divide the group order")
        infos.append(
            ClassInfo(
                representative=Permutation._raw(rep_row.copy()),
                order=r,
                class_size=size,
                min_fixed_points=int(cls_counts[0]),
                exact=exact,
            )
        )
    return infos


def _exhaustive_class_reps(G: PermGroup, r: int, budgets: Budgets) -> list:
    rows = _order_r_rows_cached(G, r, budgets)
    return _class_infos_from_rows(G, r, rows, exact=True)


def _sampled_class_reps(
    G: PermGroup,
    r: int,
    budgets: Budgets,
    seed: int,
    expected_count: Optional[int],
) -> list:
    rng = np.random.default_rng(seed)
    order = G.order()
    if order % r != 0:
        return []
    known: dict = {}
    classes = []  # (rep_row, size)
    misses = 0
    while misses < budgets.sampled_misses:
        x = G.random_element(rng)
        o = x.order()
        if o % r != 0:
            misses += 1
            continue
        y = x ** (o // r)
        if y.key() in known:
            misses += 1
            continue
        cls = _conjugacy_class(G, y.images)
        if len(cls) > budgets.materialize:
            raise BudgetExceeded(
                f"class of size {len(cls)}+ exceeds the materialize budget"
            )
        known.update(cls)
        block = np.stack(list(cls.values()))
        rep = block[np.lexsort(block.T[::-1])[0]]
        classes.append((rep, len(cls)))
        misses = 0
    total = sum(size for _, size in classes)
    exact = expected_count is not None and total == expected_count
    infos = []
    for rep_row, size in sorted(classes, key=lambda t: tuple(t[0])):
        rep = Permutation._raw(rep_row.copy())
        if order % size != 0:
            raise AssertionError("class size does not divide the group order")
        infos.append(
            ClassInfo(
                representative=rep,
                order=r,
                class_size=size,
                min_fixed_points=rep.num_fixed(),
                exact=exact,
            )
        )
    return infos


def action_prime_order_class_reps(
    A: GroupAction, r: int, mode: str = "exhaustive",
    budgets: Budgets = DEFAULT_BUDGETS, seed: int = DEFAULT_SEED
) -> list:
    """Order-r ClassInfo records for an action group, computed the cheapest
    exact way available: wreath decomposition when the action was built as a
    wreath product, a scan of the smaller faithful parent pushed through the
    coset homomorphism, or a direct scan.  mode="sampled" permits a
    random-search fallback (exact=False on its records) when no exact route
    fits the budgets."""
    if not is_prime(r):
        raise ValueError(f"r={r} is not prime")
    if A.wreath is not None:
        return wreath_prime_order_class_reps(A.wreath, r, budgets)
    G = A.group
    if A.parent is not None and A.faithful:
        pa = A.parent.parent_action
        if pa is not None and pa.wreath is not None:
            parent_infos = wreath_prime_order_class_reps(pa.wreath, r, budgets)
            return [_push_class_info(A, ci) for ci in parent_infos]
        P = A.parent.parent_group
        if P.order() <= budgets.exhaustive:
            parent_infos = prime_order_class_reps(P, r, "exhaustive", budgets)
            return [_push_class_info(A, ci) for ci in parent_infos]
    if G.order() <= budgets.exhaustive:
        return prime_order_class_reps(G, r, "exhaustive", budgets)
    if mode == "sampled":
        return prime_order_class_reps(G, r, "sampled", budgets, seed=seed)
    raise BudgetExceeded(
        f"no exact class-representative route for order {G.order()} at degree {G.degree}"
    )


def _push_class_info(A: GroupAction, ci: ClassInfo) -> ClassInfo:
    rep = ci.representative
    if isinstance(rep, WreathElement):
        rep = rep.to_permutation()
    pushed = A.parent.push(rep, check_membership=False)
    return ClassInfo(
        representative=pushed,
        order=ci.order,
        class_size=ci.class_size,
        min_fixed_points=pushed.num_fixed(),
        exact=ci.exact,
    )


# ---------------------------------------------------------------------------
# wreath-product classes (exact, from the decomposition)


def _base_class_labels(spec: WreathSpec, r: int, budgets: Budgets) -> list:
    """Classes of the base group of order dividing r: label 0 is the
    identity class, the rest are the order-r classes."""
    ident = Permutation.identity(spec.base_degree)
    labels = [(ident, 1)]
    for ci in action_prime_order_class_reps(spec.base_action, r, budgets):
        rep = ci.representative
        if isinstance(rep, WreathElement):
            rep = rep.to_permutation()
        labels.append((rep, ci.class_size))
    return labels


def _top_elements(spec: WreathSpec, budgets: Budgets) -> list:
    K = spec.top
    if K.order() > 10000:
        raise BudgetExceeded("top group too large to enumerate")
    return [Permutation._raw(row.copy()) for batch in K.element_batches() for row in batch]


def wreath_prime_order_class_reps(
    spec: WreathSpec, r: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list:
    """Exact order-r conjugacy classes of L wr K from the decomposition.

    Classes with trivial top part correspond to K-orbits of k-tuples of
    base-class labels; classes over a top element pi of order r correspond
    to C_K(pi)-orbits of label assignments on the fixed coordinates of pi
    (the r-cycles of pi force trivial cycle products, contributing a free
    factor |L|^(r-1) per cycle to the class size).  Representatives are
    materialized permutations on the spec's point set.
    """
    if not is_prime(r):
        raise ValueError(f"r={r} is not prime")
    L = spec.base_group
    k = spec.k
    lorder = L.order()
    labels = _base_class_labels(spec, r, budgets)
    tops = _top_elements(spec, budgets)
    infos = []

    # trivial-top classes: K-orbits on label tuples
    n_labels = len(labels)
    all_tuples = {t for t in np.ndindex(*([n_labels] * k))} - {(0,) * k}
    seen = set()
    for t in sorted(all_tuples):
        if t in seen:
            continue
        orbit = {tuple(_permute_tuple(t, pi)) for pi in tops}
        seen |= orbit
        size = len(orbit) * math.prod(labels[c][1] for c in t)
        rep = WreathElement(
            spec,
            tuple(labels[c][0] for c in t),
            Permutation.identity(k),
        )
        infos.append(_wreath_class_info(spec, rep, r, size, budgets))

    # order-r-top classes: per K-class of pi, C_K(pi)-orbits of assignments
    k_done = set()
    for pi in tops:
        if pi.order() != r or pi.key() in k_done:
            continue
        k_class = {Permutation._raw(row.copy()) for row in
                   _conjugacy_class(spec.top, pi.images).values()}
        k_done.update(p.key() for p in k_class)
        pi0 = min(k_class, key=lambda p: tuple(p.images))
        cent = [s for s in tops if s * pi0 == pi0 * s]
        cycles = pi0.cycles(include_fixed=True)
        fixed = [c[0] for c in cycles if len(c) == 1]
        m = sum(1 for c in cycles if len(c) == r)
        if len(fixed) + m * r != k:
            raise AssertionError("order-r top element with a bad cycle type")
        free = lorder ** ((r - 1) * m)
        n_labels = len(labels)
        seen_f = set()
        for f in sorted(np.ndindex(*([n_labels] * len(fixed)))) if fixed else [()]:
            f = tuple(f)
            if f in seen_f:
                continue
            orbit = set()
            for s in cent:
                moved = {int(s.images[p]): f[i] for i, p in enumerate(fixed)}
                orbit.add(tuple(moved[p] for p in fixed))
            seen_f |= orbit
            size = (
                len(k_class) * len(orbit) * math.prod(labels[c][1] for c in f) * free
            )
            ident = Permutation.identity(spec.base_degree)
            base = [ident] * k
            for i, p in enumerate(fixed):
                base[p] = labels[f[i]][0]
            rep = WreathElement(spec, tuple(base), pi0)
            infos.append(_wreath_class_info(spec, rep, r, size, budgets))

    worder = spec.order()
    for ci in infos:
        if worder % ci.class_size != 0:
            raise AssertionError("wreath class size does not divide the group order")
    infos.sort(key=lambda ci: (ci.class_size, ci.min_fixed_points))
    return infos


def _permute_tuple(t: tuple, pi: Permutation) -> tuple:
    out = [0] * len(t)
    for i, c in enumerate(t):
        out[int(pi.images[i])] = c
    return out


def _wreath_class_info(
    spec: WreathSpec, rep: WreathElement, r: int, size: int, budgets: Budgets
) -> ClassInfo:
    if rep.order() != r:
        raise AssertionError("wreath class representative has the wrong order")
    mat = rep.to_permutation(budgets)
    return ClassInfo(
        representative=mat,
        order=r,
        class_size=size,
        min_fixed_points=mat.num_fixed(),
        exact=True,
    )


# ---------------------------------------------------------------------------
# fixed points of wreath elements without materialization


def _as_wreath_element(spec: WreathSpec, x) -> WreathElement:
    if isinstance(x, WreathElement):
        if x.spec != spec:
            raise ValueError("element does not belong to the given wreath spec")
        return x
    try:
        base, top = x
        return WreathElement(spec, tuple(base), top)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed wreath decomposition: {exc}") from None


def wreath_fixed_point_check(spec: WreathSpec, x) -> bool:
    """Does (a_1,...,a_k; pi) fix a point, judged from the decomposition?

    Product action: a point of Delta^k is fixed iff every cycle of pi has
    a cycle product with a fixed point on Delta.  Imprimitive action: iff
    some fixed coordinate i of pi has a_i fixing a point of Delta.
    """
    w = _as_wreath_element(spec, x)
    cycles = w.top.cycles(include_fixed=True)
    if spec.flavor == "product":
        return all(w.cycle_product(c).num_fixed() > 0 for c in cycles)
    return any(
        len(c) == 1 and w.base[c[0]].num_fixed() > 0 for c in cycles
    )


# ---------------------------------------------------------------------------
# elusivity verdicts


def _budget_snapshot(budgets: Budgets) -> dict:
    return budgets.as_dict()


def _direct_exhaustive(A: GroupAction, r: int, budgets: Budgets) -> ElusivityVerdict:
    rows = _order_r_rows_cached(A.group, r, budgets)
    counts = fixed_point_counts(rows)
    bad = rows[counts == 0]
    if len(bad):
        w = Permutation._raw(bad[np.lexsort(bad.T[::-1])[0]].copy())
        return ElusivityVerdict(
            r, NOT_ELUSIVE, witness=w, method=METHOD_ENUM,
            budgets=_budget_snapshot(budgets),
        )
    return ElusivityVerdict(
        r, ELUSIVE, method=METHOD_ENUM, budgets=_budget_snapshot(budgets)
    )


def _class_coverage(A: GroupAction, r: int, budgets: Budgets) -> ElusivityVerdict:
    infos = action_prime_order_class_reps(A, r, budgets)
    exact = all(ci.exact for ci in infos)
    bad = [ci for ci in infos if ci.min_fixed_points == 0]
    if bad:
        w = min(
            (ci.representative for ci in bad), key=lambda p: tuple(p.images)
        )
        return ElusivityVerdict(
            r, NOT_ELUSIVE, witness=w, method=METHOD_COVER,
            budgets=_budget_snapshot(budgets), exact=exact,
        )
    return ElusivityVerdict(
        r, ELUSIVE, method=METHOD_COVER, budgets=_budget_snapshot(budgets), exact=exact
    )


def _backtrack_verdict(
    A: GroupAction, r: int, budgets: Budgets, determinism: bool
) -> ElusivityVerdict:
    w = derangement_backtrack(A.group, r, determinism=determinism)
    if w is None:
        return ElusivityVerdict(
            r, ELUSIVE, method=METHOD_BACKTRACK, budgets=_budget_snapshot(budgets)
        )
    return ElusivityVerdict(
        r, NOT_ELUSIVE, witness=w, method=METHOD_BACKTRACK,
        budgets=_budget_snapshot(budgets),
    )


def _parent_coverage_available(A: GroupAction, budgets: Budgets) -> bool:
    if A.parent is None or not A.faithful:
        return False
    pa = A.parent.parent_action
    if pa is not None and pa.wreath is not None:
        return pa.wreath.base_group.order() <= budgets.exhaustive
    return A.parent.parent_group.order() <= budgets.exhaustive


def is_r_elusive(
    A: GroupAction,
    r: int,
    budgets: Budgets = DEFAULT_BUDGETS,
    determinism: bool = False,
) -> ElusivityVerdict:
    """Certified r-elusivity verdict for a transitive action.

    Method selection: small groups are scanned outright; coset actions
    with an enumerable faithful parent go through class coverage (fixed
    point counts are class functions, so one representative per class
    decides); wreath-built actions use the structural criterion; the rest
    fall back to backtrack search.
    """
    if not is_prime(r):
        raise ValueError(f"r={r} is not prime")
    if not A.group.is_transitive():
        raise ValueError("elusivity verdicts need a transitive action")
    worder = A.wreath.order() if A.wreath is not None else A.group.order()
    if worder % r != 0:
        return ElusivityVerdict(
            r, NOT_APPLICABLE,
            reason=f"{r} does not divide the group order {worder}",
            budgets=_budget_snapshot(budgets),
        )
    if worder <= budgets.scan:
        return _direct_exhaustive(A, r, budgets)
    if _parent_coverage_available(A, budgets):
        return _class_coverage(A, r, budgets)
    if A.wreath is not None:
        return _structural_verdict(A.wreath, r, budgets)
    if worder <= budgets.exhaustive:
        return _direct_exhaustive(A, r, budgets)
    return _backtrack_verdict(A, r, budgets, determinism)


def _report(A: GroupAction, primes: Sequence[int], kind: str, budgets, determinism) -> ElusivityReport:
    verdicts = [is_r_elusive(A, r, budgets, determinism) for r in primes]
    aggregate = all(v.status == ELUSIVE for v in verdicts)
    return ElusivityReport(kind, A.degree, verdicts, aggregate)


def is_2prime_elusive(
    A: GroupAction,
    budgets: Budgets = DEFAULT_BUDGETS,
    determinism: bool = False,
) -> ElusivityReport:
    """2'-elusivity: verdicts for every odd prime dividing the degree.

    Degrees that are powers of 2 get a NotApplicable report (2'-elusivity
    is only defined when an odd prime divides the degree)."""
    odd = [p for p in prime_divisors(A.degree) if p != 2]
    if not odd:
        return ElusivityReport(
            "2'-elusive", A.degree, [], None,
            reason="degree must be divisible by an odd prime",
        )
    return _report(A, odd, "2'-elusive", budgets, determinism)


def is_elusive(
    A: GroupAction,
    budgets: Budgets = DEFAULT_BUDGETS,
    determinism: bool = False,
) -> ElusivityReport:
    """Elusivity over every prime dividing the degree (including 2)."""
    return _report(A, prime_divisors(A.degree), "elusive", budgets, determinism)


# ---------------------------------------------------------------------------
# structural wreath checker


def _structural_verdict(spec: WreathSpec, r: int, budgets: Budgets) -> ElusivityVerdict:
    L = spec.base_group
    K = spec.top
    r_in_base = L.order() % r == 0
    r_in_top = K.order() % r == 0
    snapshot = _budget_snapshot(budgets)
    if not r_in_base and not r_in_top:
        return ElusivityVerdict(
            r, NOT_APPLICABLE,
            reason=f"{r} divides neither the base nor the top order",
            budgets=snapshot,
        )

    base_witness = None
    base_exact = True
    if r_in_base:
        v = is_r_elusive(spec.base_action, r, budgets)
        base_exact = v.exact
        if v.status == NOT_ELUSIVE:
            base_witness = v.witness

    ident = Permutation.identity(spec.base_degree)
    if spec.flavor == "product":
        if base_witness is not None:
            base = (base_witness,) + (ident,) * (spec.k - 1)
            w = WreathElement(spec, base, Permutation.identity(spec.k))
            return _structural_not_elusive(spec, r, w, snapshot, budgets)
        return ElusivityVerdict(
            r, ELUSIVE, method=METHOD_WREATH, budgets=snapshot,
            exact=base_exact, spec=spec,
        )

    # imprimitive flavor: the top can contribute block-swapping derangements
    if base_witness is not None:
        w = WreathElement(spec, (base_witness,) * spec.k, Permutation.identity(spec.k))
        return _structural_not_elusive(spec, r, w, snapshot, budgets)
    if r_in_top:
        pi = derangement_backtrack(K, r)
        if pi is not None:
            w = WreathElement(spec, (ident,) * spec.k, pi)
            return _structural_not_elusive(spec, r, w, snapshot, budgets)
    return ElusivityVerdict(
        r, ELUSIVE, method=METHOD_WREATH, budgets=snapshot,
        exact=base_exact, spec=spec,
    )


def _structural_not_elusive(
    spec: WreathSpec, r: int, w: WreathElement, snapshot: dict, budgets: Budgets
) -> ElusivityVerdict:
    witness = w
    if spec.degree <= budgets.materialize:
        witness = w.to_permutation(budgets)
    return ElusivityVerdict(
        r, NOT_ELUSIVE, witness=witness, method=METHOD_WREATH,
        budgets=snapshot, spec=spec,
    )


def structural_wreath_elusivity(
    spec: WreathSpec, r: int, budgets: Budgets = DEFAULT_BUDGETS
) -> ElusivityVerdict:
    """Exact r-elusivity of L wr K (r an odd prime) without enumerating it.

    Order-r elements have top part of order 1 or r; their r-cycles force
    trivial cycle products, so derangements exist exactly when the base
    group has an order-r derangement on Delta (product action) or, in the
    imprimitive action, also when the top group has a fixed-point-free
    order-r element on the k coordinates.
    """
    if not is_prime(r) or r == 2:
        raise ValueError(f"the structural checker is exposed for odd primes, got r={r}")
    if spec.base_group.order() > budgets.exhaustive:
        raise BudgetExceeded("base group exceeds the exhaustive budget")
    return _structural_verdict(spec, r, budgets)


# ---------------------------------------------------------------------------
# semiregular elements


@dataclass
class SemiregularResult:
    witness: Optional[Permutation]
    prime: Optional[int]
    exact: bool
    note: str

    def __bool__(self):
        return self.witness is not None


def semiregular_search(
    A: GroupAction,
    budgets: Budgets = DEFAULT_BUDGETS,
    determinism: bool = False,
) -> SemiregularResult:
    """Look for a semiregular element: a prime-order derangement.

    Tries each prime dividing the group order in increasing order.  Exact
    ("none" is a certificate) whenever every per-prime check ran an exact
    method, which holds for the whole shipped corpus.
    """
    G = A.group
    order = A.wreath.order() if A.wreath is not None else G.order()
    exact = True
    for p in prime_divisors(order):
        if G.is_transitive():
            v = is_r_elusive(A, p, budgets, determinism)
            if v.status == NOT_ELUSIVE:
                w = v.witness
                if isinstance(w, WreathElement):
                    w = w.to_permutation(budgets)
                return SemiregularResult(w, p, v.exact, f"order-{p} derangement")
            if not v.exact or v.status == PROBABILISTIC:
                exact = False
        else:
            w = derangement_backtrack(G, p, determinism=determinism)
            if w is not None:
                return SemiregularResult(w, p, True, f"order-{p} derangement")
    return SemiregularResult(None, None, exact, "none found" + ("" if exact else " (bounded)"))
