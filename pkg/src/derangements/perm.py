"""Core permutation-group engine.

Permutations are bijections of {0, ..., n-1} stored as numpy image arrays.
The composition convention is left-to-right throughout the project:

    (a * b)(x) = b(a(x)),   so  alpha^(g h) = (alpha^g)^h

which is the way exponent notation reads in the group-theory literature.
Points are 0-indexed internally and 1-indexed in cycle notation, file
formats and reports.

Groups carry a lazily built stabilizer chain.  Construction is randomized
(seeded, default 0) for speed, followed by a deterministic verification
sweep in which every Schreier generator of every level is sifted; the
result is therefore exact, not Monte Carlo, and independent of the seed.
The chain supplies order, membership, uniform random elements, transversal
enumeration, and the pruned backtrack search for fixed-point-free elements
of prime order.
"""

from __future__ import annotations

import math
import re
import threading
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .config import DEFAULT_BUDGETS, DEFAULT_SEED, BudgetExceeded


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """A bijection of {0, ..., n-1} stored as an image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        arr = np.array(images, dtype=np.int64, copy=True)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a permutation needs a nonempty 1-d image array")
        n = arr.size
        seen = np.zeros(n, dtype=bool)
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("image out of range")
        seen[arr] = True
        if not seen.all():
            raise ValueError("image array is not a bijection")
        arr.flags.writeable = False
        self.images = arr
        self._hash = None

    @classmethod
    def _raw(cls, arr: np.ndarray) -> "Permutation":
        # internal fast path: caller guarantees arr is a valid image array
        p = object.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.flags.writeable = False
        p.images = arr
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(np.arange(degree, dtype=np.int64))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 0-indexed points."""
        img = np.arange(degree, dtype=np.int64)
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} appears in two cycles")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls._raw(img)

    @property
    def degree(self) -> int:
        return self.images.size

    def __mul__(self, other: "Permutation") -> "Permutation":
        # left-to-right: (self*other)(x) = other(self(x))
        if self.images.size != other.images.size:
            raise ValueError("degree mismatch")
        return Permutation._raw(other.images[self.images])

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.images.size, dtype=np.int64)
        return Permutation._raw(inv)

    def __pow__(self, k: int) -> "Permutation":
        n = self.images.size
        if k < 0:
            return self.inverse() ** (-k)
        result = np.arange(n, dtype=np.int64)
        base = self.images
        while k:
            if k & 1:
                result = base[result]  # result := result * base
            base = base[base]
            k >>= 1
        return Permutation._raw(result)

    def order(self) -> int:
        cycs = self.cycles()
        return math.lcm(*(len(c) for c in cycs)) if cycs else 1

    def fixed_points(self) -> set:
        return set(int(i) for i in np.nonzero(self.images == np.arange(self.images.size))[0])

    def num_fixed(self) -> int:
        return int((self.images == np.arange(self.images.size)).sum())

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.images.size)).all())

    def is_derangement(self) -> bool:
        return self.num_fixed() == 0

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles (length >= 2), each starting at its least point.

        With include_fixed, fixed points appear as length-1 cycles.
        """
        img = self.images
        n = img.size
        seen = np.zeros(n, dtype=bool)
        out = []
        for start in range(n):
            if seen[start] or img[start] == start:
                if img[start] == start and include_fixed:
                    out.append((start,))
                seen[start] = True
                continue
            cyc = []
            pt = start
            while not seen[pt]:
                seen[pt] = True
                cyc.append(pt)
                pt = int(img[pt])
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-indexed disjoint cycle notation; '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycs)

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def key(self) -> bytes:
        return self.images.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images.size == other.images.size and bool(
            (self.images == other.images).all()
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: compose(a, b)(x) = b(a(x))."""
    return a * b


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """x^g = g^-1 * x * g (left-to-right)."""
    ginv = g.inverse()
    return Permutation._raw(g.images[x.images[ginv.images]])


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def order_of(x: Permutation) -> int:
    return x.order()


def fixed_points(x: Permutation) -> set:
    return x.fixed_points()


# ---------------------------------------------------------------------------
# cycle-notation parsing (1-indexed, as used in generator files and reports)


def parse_cycles(text: str) -> list:
    """Parse '(3,7,11,8)(4,10,5,6)' into cycles of 1-indexed points.

    '()' denotes the identity (no cycles).  Raises ValueError on malformed
    input; the caller attaches file/line context.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty cycle expression")
    cycles = []
    i = 0
    while i < len(s):
        if s[i].isspace():
            i += 1
            continue
        if s[i] != "(":
            raise ValueError(f"expected '(' at position {i}")
        j = s.find(")", i)
        if j < 0:
            raise ValueError("unclosed cycle")
        body = s[i + 1 : j].strip()
        if body:
            try:
                pts = [int(tok) for tok in re.split(r"[\s,]+", body)]
            except ValueError:
                raise ValueError(f"bad cycle body '{body}'") from None
            if any(p < 1 for p in pts):
                raise ValueError("cycle points must be >= 1")
            if len(set(pts)) != len(pts):
                raise ValueError("repeated point inside a cycle")
            cycles.append(tuple(pts))
        i = j + 1
    return cycles


def permutation_from_cycles_1indexed(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    return Permutation.from_cycles(degree, [[p - 1 for p in c] for c in cycles])


# ---------------------------------------------------------------------------
# stabilizer chains


class _Level:
    __slots__ = ("point", "transversal", "order_pts")

    def __init__(self, point: int):
        self.point = point
        self.transversal: dict = {}
        self.order_pts: list = []  # orbit points in discovery order


class StabilizerChain:
    """Base, transversals and strong generators for a permutation group.

    ``strong`` holds all strong generators; a generator belongs to level i
    when it fixes base[0..i-1] pointwise.  Transversal representatives u
    satisfy base[i]^u = orbit point.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 base_prefix: Sequence[int] = (), seed: int = DEFAULT_SEED,
                 max_degree: Optional[int] = None):
        if max_degree is None:
            max_degree = DEFAULT_BUDGETS.chain_degree
        if degree > max_degree:
            raise BudgetExceeded(
                f"refusing to build a stabilizer chain at degree {degree} "
                f"(limit {max_degree}); use the structural checkers instead")
        self.degree = degree
        self.base: list = []
        self.levels: list = []
        self.strong: list = []  # (perm, depth)
        self._identity = Permutation.identity(degree)
        gens = [g for g in generators if not g.is_identity()]
        self._build(gens, list(base_prefix), seed)

    # -- construction ------------------------------------------------------

    def _depth(self, g: Permutation) -> int:
        """Number of leading base points fixed by g."""
        d = 0
        for b in self.base:
            if g.images[b] != b:
                break
            d += 1
        return d

    def _level_gens(self, i: int) -> list:
        return [g for g, depth in self.strong if depth >= i]

    def _new_level(self, point: int):
        self.base.append(point)
        self.levels.append(_Level(point))

    def _recompute_transversal(self, i: int):
        lvl = self.levels[i]
        gens = self._level_gens(i)
        b = lvl.point
        trans = {b: self._identity}
        order_pts = [b]
        qi = 0
        while qi < len(order_pts):
            pt = order_pts[qi]
            qi += 1
            u = trans[pt]
            for g in gens:
                q = int(g.images[pt])
                if q not in trans:
                    trans[q] = u * g
                    order_pts.append(q)
        lvl.transversal = trans
        lvl.order_pts = order_pts

    def _add_strong(self, g: Permutation):
        depth = self._depth(g)
        if depth == len(self.base):
            # g fixes the whole base: extend it with g's first moved point
            moved = int(np.nonzero(g.images != np.arange(self.degree))[0][0])
            self._new_level(moved)
        self.strong.append((g, depth))
        return depth

    def sift(self, g: Permutation, from_level: int = 0):
        """Strip g through transversals; return (residue, stuck_level)."""
        for i in range(from_level, len(self.levels)):
            lvl = self.levels[i]
            pt = int(g.images[lvl.point])
            u = lvl.transversal.get(pt)
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.levels)

    def _build(self, gens: list, base_prefix: list, seed: int):
        for b in base_prefix:
            self._new_level(b)
        for g in gens:
            self._add_strong(g)
        if not self.base and self.strong:
            # ensured by _add_strong, but keep the invariant explicit
            raise AssertionError("base setup failed")
        for i in range(len(self.levels)):
            self._recompute_transversal(i)

        # randomized seeding: sift random words, add residues
        if self.strong:
            rng = np.random.default_rng(seed)
            base_gens = [g for g, _ in self.strong]
            misses = 0
            while misses < 8:
                word = rng.integers(0, len(base_gens), size=int(rng.integers(2, 8)))
                w = base_gens[word[0]]
                for idx in word[1:]:
                    w = w * base_gens[idx]
                residue, _ = self.sift(w)
                if residue.is_identity():
                    misses += 1
                else:
                    misses = 0
                    d = self._add_strong(residue)
                    for i in range(d + 1):
                        self._recompute_transversal(i)
                    base_gens = [g for g, _ in self.strong]

        # deterministic verification sweep (Schreier generators sift to id)
        i = len(self.levels) - 1
        while i >= 0:
            self._recompute_transversal(i)
            lvl = self.levels[i]
            gens_i = self._level_gens(i)
            restart = False
            for pt in list(lvl.order_pts):
                u = lvl.transversal[pt]
                for s in gens_i:
                    q = int(s.images[pt])
                    u2 = lvl.transversal[q]
                    schreier = u * s * u2.inverse()
                    residue, j = self.sift(schreier, i + 1)
                    if not residue.is_identity():
                        d = self._add_strong(residue)
                        for lev in range(min(d, j), len(self.levels)):
                            self._recompute_transversal(lev)
                        i = len(self.levels) - 1 if d >= len(self.levels) else max(d, i)
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue.is_identity()

    def stabilizer_gens(self, level: int = 1) -> list:
        """Strong generators fixing base[0..level-1] pointwise."""
        return self._level_gens(level)

    def random_element(self, rng: np.random.Generator) -> Permutation:
        img = np.arange(self.degree, dtype=np.int64)
        for lvl in reversed(self.levels):
            pts = lvl.order_pts
            u = lvl.transversal[pts[int(rng.integers(0, len(pts)))]]
            img = u.images[img]  # img := img * u, building t_{k-1}...t_0
        return Permutation._raw(img)

    def transversal_matrices(self) -> list:
        """Per level, the image rows of transversal reps (orbit-point order)."""
        out = []
        for lvl in self.levels:
            rows = np.stack([lvl.transversal[pt].images for pt in sorted(lvl.transversal)])
            out.append(rows)
        return out


# ---------------------------------------------------------------------------
# groups


def _dedup(perms: Iterable[Permutation]) -> list:
    seen = set()
    out = []
    for p in perms:
        k = p.key()
        if k not in seen:
            seen.add(k)
            out.append(p)
    return out


class PermGroup:
    """A finite permutation group on {0, ..., degree-1} given by generators."""

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None,
                 chain_seed: int = DEFAULT_SEED,
                 max_chain_degree: Optional[int] = None):
        gens = list(generators)
        if not gens:
            if degree is None:
                raise ValueError("a group needs generators or an explicit degree")
            gens = [Permutation.identity(degree)]
        if degree is not None and any(g.degree != degree for g in gens):
            raise ValueError("generator degree mismatch")
        d = gens[0].degree
        if any(g.degree != d for g in gens):
            raise ValueError("generators have unequal degrees")
        self.degree = d
        self.generators = tuple(gens)
        self._chain: Optional[StabilizerChain] = None
        self._chain_seed = chain_seed
        self._max_chain_degree = max_chain_degree
        self._lock = threading.Lock()
        self._stab_cache: dict = {}
        self._transitive: Optional[bool] = None

    # -- chain -------------------------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabilizerChain(
                        self.degree, self.generators, seed=self._chain_seed,
                        max_degree=self._max_chain_degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, x: Permutation) -> bool:
        return self.chain.contains(x)

    def is_subgroup(self, other: "PermGroup") -> bool:
        """True when self <= other (membership of every generator)."""
        return all(other.contains(g) for g in self.generators)

    def random_element(self, rng: np.random.Generator) -> Permutation:
        return self.chain.random_element(rng)

    # -- orbits ------------------------------------------------------------

    def orbit(self, point: int) -> set:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        queue = [point]
        while queue:
            pt = queue.pop()
            for g in self.generators:
                q = int(g.images[pt])
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def orbits(self) -> list:
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for pt in range(self.degree):
            if not seen[pt]:
                orb = sorted(self.orbit(pt))
                seen[list(orb)] = True
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        if self._transitive is None:
            self._transitive = len(self.orbit(0)) == self.degree
        return self._transitive

    def orbit_with_transversal(self, point: int) -> dict:
        """Map orbit point -> group element sending `point` there."""
        reps = {point: Permutation.identity(self.degree)}
        queue = [point]
        while queue:
            pt = queue.pop(0)
            u = reps[pt]
            for g in self.generators:
                q = int(g.images[pt])
                if q not in reps:
                    reps[q] = u * g
                    queue.append(q)
        return reps

    # -- derived subgroups, closures ----------------------------------------

    def point_stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        if point not in self._stab_cache:
            chain = StabilizerChain(self.degree, self.generators,
                                    base_prefix=[point], seed=self._chain_seed,
                                    max_degree=self._max_chain_degree)
            gens = chain.stabilizer_gens(1)
            sub = PermGroup(gens, degree=self.degree, chain_seed=self._chain_seed,
                            max_chain_degree=self._max_chain_degree)
            # orbit-stabilizer cross-check comes for free
            assert chain.order() == sub.order() * len(chain.levels[0].transversal)
            self._stab_cache[point] = sub
        return self._stab_cache[point]

    def normal_closure(self, elements: Sequence[Permutation]) -> "PermGroup":
        """Smallest normal subgroup of self containing the given elements.

        Deterministic conjugate closure: every generator-conjugate of every
        closure generator must sift into the closure before we return.
        """
        for x in elements:
            if not self.contains(x):
                raise ValueError("closure seed element lies outside the group")
        gens = _dedup(x for x in elements if not x.is_identity())
        if not gens:
            return PermGroup([], degree=self.degree)
        while True:
            candidate = PermGroup(gens, degree=self.degree,
                                  chain_seed=self._chain_seed,
                                  max_chain_degree=self._max_chain_degree)
            new = []
            for x in gens:
                for g in self.generators:
                    c = conjugate(x, g)
                    if not candidate.contains(c):
                        new.append(c)
            if not new:
                return candidate
            gens = _dedup(gens + new)

    def derived_subgroup(self) -> "PermGroup":
        comms = [commutator(a, b)
                 for i, a in enumerate(self.generators)
                 for b in self.generators[i + 1:]]
        return self.normal_closure([c for c in comms if not c.is_identity()])

    def is_normal(self, sub: "PermGroup") -> bool:
        if not sub.is_subgroup(self):
            return False
        return all(sub.contains(conjugate(x, g))
                   for x in sub.generators for g in self.generators)

    def join(self, other: "PermGroup") -> "PermGroup":
        """The subgroup generated by both groups' generators."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return PermGroup(_dedup(self.generators + other.generators),
                         degree=self.degree, chain_seed=self._chain_seed,
                         max_chain_degree=self._max_chain_degree)

    # -- blocks -------------------------------------------------------------

    def minimal_block_system(self, alpha: int, beta: int):
        """Finest block system with alpha, beta in one cell, or None.

        None means the pair forces the universal partition (no proper
        nontrivial block contains both points).  Requires transitivity.
        """
        if not self.is_transitive():
            raise ValueError("block systems need a transitive group")
        if alpha == beta:
            raise ValueError("need two distinct points")
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[ry] = rx
            return True

        union(alpha, beta)
        queue = [(alpha, beta)]
        while queue:
            u, v = queue.pop()
            for g in self.generators:
                a, b = int(g.images[u]), int(g.images[v])
                if union(a, b):
                    queue.append((a, b))
        cells: dict = {}
        for pt in range(n):
            cells.setdefault(find(pt), []).append(pt)
        blocks = sorted((tuple(sorted(c)) for c in cells.values()))
        if len(blocks) == 1:
            return None
        return BlockSystem(self.degree, blocks)

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        if self.degree == 1:
            return True
        return all(self.minimal_block_system(0, beta) is None
                   for beta in range(1, self.degree))

    def nontrivial_block_system(self):
        """Some proper nontrivial block system, or None when primitive.

        Scans the minimal systems over pairs (0, beta); any imprimitive
        transitive group yields one this way.
        """
        for beta in range(1, self.degree):
            bs = self.minimal_block_system(0, beta)
            if bs is not None:
                return bs
        return None

    # -- enumeration ---------------------------------------------------------

    def element_batches(self, max_rows: int = 65536) -> Iterator[np.ndarray]:
        """Yield image matrices whose rows enumerate the group exactly once.

        Rows are products t_{k-1}...t_0 of transversal representatives, so
        uniqueness follows from the chain's unique factorization.
        """
        mats = self.chain.transversal_matrices()
        n = self.degree
        if not mats:
            yield np.arange(n, dtype=np.int64)[None, :]
            return
        suffix = np.arange(n, dtype=np.int64)[None, :]
        j = len(mats)
        while j > 0 and suffix.shape[0] * mats[j - 1].shape[0] <= max_rows:
            T = mats[j - 1]
            # products of levels >= j-1: rows T[t][suffix[s]]
            suffix = T[:, suffix].reshape(-1, n)
            j -= 1
        if j == 0:
            yield suffix
            return
        counts = [mats[i].shape[0] for i in range(j)]
        odometer = [0] * j
        while True:
            M = suffix
            for i in range(j - 1, -1, -1):
                M = mats[i][odometer[i]][M]
            yield M
            pos = j - 1
            while pos >= 0:
                odometer[pos] += 1
                if odometer[pos] < counts[pos]:
                    break
                odometer[pos] = 0
                pos -= 1
            if pos < 0:
                return

    def enumerate_elements(self, budget: Optional[int] = None) -> Iterator[Permutation]:
        """Stream every element exactly once; refuses over-budget groups."""
        if budget is None:
            budget = DEFAULT_BUDGETS.exhaustive
        n = self.order()
        if n > budget:
            raise BudgetExceeded(
                f"group order {n} exceeds the exhaustive budget {budget}")
        for block in self.element_batches():
            for row in block:
                yield Permutation._raw(row.copy())

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


class BlockSystem:
    """A G-invariant partition of the point set into equal-size cells."""

    def __init__(self, degree: int, cells: Sequence[Sequence[int]]):
        cells = [tuple(sorted(c)) for c in cells]
        sizes = {len(c) for c in cells}
        if len(sizes) != 1:
            raise ValueError("block cells must have equal size")
        (size,) = sizes
        if size * len(cells) != degree:
            raise ValueError("cells do not partition the point set")
        covered = sorted(p for c in cells for p in c)
        if covered != list(range(degree)):
            raise ValueError("cells do not partition the point set")
        self.degree = degree
        self.cells = sorted(cells)
        self.cell_size = size
        self.cell_count = len(cells)
        self._cell_of = {}
        for idx, c in enumerate(self.cells):
            for p in c:
                self._cell_of[p] = idx

    def cell_of(self, point: int) -> int:
        return self._cell_of[point]

    def is_invariant(self, G: PermGroup) -> bool:
        for g in G.generators:
            for cell in self.cells:
                image = tuple(sorted(int(g.images[p]) for p in cell))
                if image not in self._cells_set():
                    return False
        return True

    def _cells_set(self):
        if not hasattr(self, "_cset"):
            self._cset = set(self.cells)
        return self._cset

    def __repr__(self) -> str:
        return f"BlockSystem({self.cell_count} cells of size {self.cell_size})"


# ---------------------------------------------------------------------------
# spec-named module-level operations


def orbit(G: PermGroup, point: int) -> set:
    return G.orbit(point)


def orbits(G: PermGroup) -> list:
    return G.orbits()


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def build_chain(G: PermGroup) -> StabilizerChain:
    return G.chain


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, x: Permutation) -> bool:
    return G.contains(x)


def point_stabilizer(G: PermGroup, point: int) -> PermGroup:
    return G.point_stabilizer(point)


def normal_closure(G: PermGroup, elements: Sequence[Permutation]) -> PermGroup:
    return G.normal_closure(elements)


def derived_subgroup(G: PermGroup) -> PermGroup:
    return G.derived_subgroup()


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    return G.is_normal(N)


def minimal_block_system(G: PermGroup, alpha: int, beta: int):
    return G.minimal_block_system(alpha, beta)


def is_primitive(G: PermGroup) -> bool:
    return G.is_primitive()


def enumerate_elements(G: PermGroup, budget: Optional[int] = None) -> Iterator[Permutation]:
    return G.enumerate_elements(budget=budget)


# ---------------------------------------------------------------------------
# backtrack search for prime-order derangements


def derangement_backtrack(G: PermGroup, r: int, determinism: bool = False) -> Optional[Permutation]:
    """Find an order-r element of G without fixed points, or certify None.

    Depth-first search over stabilizer-chain cosets.  After the levels
    0..i have been chosen the image of every base point b_j (j <= i) under
    the final element is already determined, so any partial product fixing
    such a point is pruned.  A returned None is exact: the full pruned tree
    was exhausted.  In determinism mode the lexicographically least witness
    is returned (full exploration); otherwise the first one found.
    """
    n = G.degree
    if G.order() % r != 0:
        return None  # no elements of that order exist
    chain = G.chain
    levels = chain.levels
    if not levels:
        return None
    base = chain.base
    ident = np.arange(n, dtype=np.int64)

    best: Optional[np.ndarray] = None

    # iterative DFS; stack holds (level_index, partial_images)
    # partial at depth i is t_i * ... * t_0 (the factors applied last)
    level_rows = []
    for lvl in levels:
        pts = sorted(lvl.transversal)
        level_rows.append([lvl.transversal[p].images for p in pts])

    stack = [(0, None)]
    while stack:
        i, partial = stack.pop()
        if i == len(levels):
            g = partial if partial is not None else ident
            if (g == ident).any():  # fixed point (or the identity itself)
                continue
            # order test: r prime, so order r <=> g^r = id and g != id
            res = ident
            e = r
            sq = g
            while e:
                if e & 1:
                    res = sq[res]
                sq = sq[sq]
                e >>= 1
            if not (res == ident).all():
                continue
            if determinism:
                cand = g
                if best is None or tuple(cand) < tuple(best):
                    best = cand.copy()
            else:
                return Permutation._raw(g.copy())
            continue
        rows = level_rows[i]
        bases = base[: i + 1]
        children = []
        for t in rows:
            new = t if partial is None else partial[t]
            # prune: some base point b_j (j <= i) already fixed by the leaf
            ok = True
            for b in bases:
                if new[b] == b:
                    ok = False
                    break
            if ok:
                children.append((i + 1, new))
        stack.extend(reversed(children))
    if best is not None:
        return Permutation._raw(best)
    return None
