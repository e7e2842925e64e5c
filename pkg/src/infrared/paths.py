"""Convex polygonal paths and the combinatorics of the infrared differential.

For a direction zeta, the zeta-hull of a point set B is the convex hull of
the union of rays w + zeta*R_{>=0}, w in B.  A polygonal path with vertices
in the configuration is *zeta-convex* when it equals the finite part of the
boundary of the zeta-hull of its own vertex set.  Paths are traversed with
the linear form

    ell_zeta(w) = cross(zeta, w) = dx*y - dy*x

strictly increasing, and a zeta-convex chain turns clockwise at every
intermediate vertex (the hull region lies on its right).

The height set h(gamma) collects all configuration points lying in the
zeta-hull of gamma apart from the endpoints; intermediate vertices form
l(gamma).  Removing an intermediate vertex w and re-hulling gives the
reduction of gamma at w, which drops the height by exactly one.  Incidence
entries carry the sign (-1)^(rank of w in sorted h(gamma)), the wedge sign
of the infrared differential.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegeneratePosition, InvalidEndpoints, InvalidReduction
from .geometry import Config, Dir, Pt, general_position

Q = Fraction


def ell(zeta: Dir, p: Pt) -> Fraction:
    return zeta.infinity_form(p)


@dataclass(frozen=True)
class PolyPath:
    """An indexed polygonal path in a configuration, tied to a direction."""

    config: Config
    vertices: tuple[int, ...]
    zeta: Dir

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise InvalidEndpoints("a path needs at least two vertices")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a == b:
                raise InvalidEndpoints("consecutive vertices must differ")

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class HeightData:
    l_set: tuple[int, ...]
    h_set: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.l_set)

    @property
    def h(self) -> int:
        return len(self.h_set)


@dataclass(frozen=True)
class IncidenceEntry:
    gamma: PolyPath
    removed: int
    gamma_prime: PolyPath
    sign: int


def _require_infinity(A: Config, zeta: Dir):
    rep = general_position(A, zeta)
    if not rep.incl_infinity:
        raise DegeneratePosition(
            "configuration not in general position including zeta-infinity"
        )


def zeta_hull_chain(A: Config, subset: Iterable[int], zeta: Dir) -> list[int]:
    """Finite boundary part of the zeta-hull of the given points, as the
    index chain ordered by increasing ell_zeta.  A single point for |S|=1."""
    subset = list(dict.fromkeys(subset))
    if not subset:
        raise InvalidEndpoints("empty point set")
    keys = {i: ell(zeta, A[i]) for i in subset}
    if len(set(keys.values())) != len(subset):
        raise DegeneratePosition("projection tie inside zeta-hull input")
    order = sorted(subset, key=keys.get)
    chain: list[int] = []
    for i in order:
        while len(chain) >= 2 and (A[chain[-1]] - A[chain[-2]]).cross(
            A[i] - A[chain[-1]]
        ) >= 0:
            chain.pop()
        chain.append(i)
    return chain


def zeta_hull(A: Config, subset: Iterable[int], zeta: Dir) -> PolyPath | tuple[int]:
    chain = zeta_hull_chain(A, subset, zeta)
    if len(chain) == 1:
        return (chain[0],)
    return PolyPath(A, tuple(chain), zeta)


def is_zeta_convex(A: Config, vertices: Sequence[int], zeta: Dir) -> bool:
    """Hull-equality definition: the sequence equals the chain of the
    zeta-hull of its own vertex set."""
    if len(vertices) < 2:
        return False
    if len(set(vertices)) != len(vertices):
        return False
    try:
        chain = zeta_hull_chain(A, vertices, zeta)
    except DegeneratePosition:
        return False
    return list(vertices) == chain


def turns_clockwise(A: Config, vertices: Sequence[int]) -> bool:
    """Fast pre-filter: strictly clockwise turn at every interior vertex."""
    for a, b, c in zip(vertices, vertices[1:], vertices[2:]):
        if (A[b] - A[a]).cross(A[c] - A[b]) >= 0:
            return False
    return True


def height_data(path: PolyPath) -> HeightData:
    """Intermediate vertices, and all configuration points inside the
    zeta-hull of the path (endpoints excluded)."""
    A, zeta = path.config, path.zeta
    chain = path.vertices
    lset = tuple(sorted(chain[1:-1]))
    lo = ell(zeta, A[chain[0]])
    hi = ell(zeta, A[chain[-1]])
    members = set(chain[1:-1])
    for w in range(len(A)):
        if w in chain:
            continue
        lw = ell(zeta, A[w])
        if not (lo < lw < hi):
            continue
        for a, b in zip(chain, chain[1:]):
            if ell(zeta, A[a]) < lw < ell(zeta, A[b]):
                if (A[b] - A[a]).cross(A[w] - A[a]) <= 0:
                    members.add(w)
                break
    return HeightData(lset, tuple(sorted(members)))


def enumerate_zeta_convex_paths(
    A: Config, i: int, j: int, zeta: Dir
) -> list[PolyPath]:
    """All zeta-convex paths from w_i to w_j with vertices in A, in
    lexicographic vertex order.

    DFS over vertices sorted by the ell_zeta projection, pruning on the
    strict clockwise-turn condition; correctness against the hull-equality
    oracle is asserted in the test suite.
    """
    _require_infinity(A, zeta)
    li, lj = ell(zeta, A[i]), ell(zeta, A[j])
    if not li < lj:
        raise InvalidEndpoints(
            f"projection of source {i} must be strictly below target {j}"
        )
    between = sorted(
        (w for w in range(len(A)) if li < ell(zeta, A[w]) < lj and w != j),
        key=lambda w: ell(zeta, A[w]),
    )
    found: list[PolyPath] = []

    def extend(chain: list[int]):
        last = chain[-1]
        ll = ell(zeta, A[last])
        candidates = [w for w in between if ell(zeta, A[w]) > ll] + [j]
        for w in candidates:
            if len(chain) >= 2:
                if (A[last] - A[chain[-2]]).cross(A[w] - A[last]) >= 0:
                    continue
            chain.append(w)
            if w == j:
                found.append(PolyPath(A, tuple(chain), zeta))
            else:
                extend(chain)
            chain.pop()

    extend([i])
    found.sort(key=lambda p: p.vertices)
    return found


def paths_by_height(
    A: Config, i: int, j: int, zeta: Dir
) -> dict[int, list[PolyPath]]:
    """The height filtration of Lambda(i, j)."""
    strata: dict[int, list[PolyPath]] = {}
    for p in enumerate_zeta_convex_paths(A, i, j, zeta):
        strata.setdefault(height_data(p).h, []).append(p)
    return strata


def reduce_path(path: PolyPath, w: int) -> PolyPath:
    """Reduction at an intermediate vertex: drop w, re-hull the remaining
    height set together with the endpoints."""
    hd = height_data(path)
    if w not in hd.l_set:
        raise InvalidReduction(f"{w} is not an intermediate vertex")
    A, zeta = path.config, path.zeta
    keep = [path.source, path.target] + [x for x in hd.h_set if x != w]
    new_chain = zeta_hull_chain(A, keep, zeta)
    reduced = PolyPath(A, tuple(new_chain), zeta)
    new_hd = height_data(reduced)
    assert set(new_hd.h_set) == set(hd.h_set) - {w}, "height bookkeeping broke"
    return reduced


def wedge_sign(path: PolyPath, w: int) -> int:
    """(-1)^(rank of w in the sorted height set of the path)."""
    hset = height_data(path).h_set
    return -1 if hset.index(w) % 2 else 1


def incidence(
    A: Config, zeta: Dir, i: int, j: int, m: int
) -> list[IncidenceEntry]:
    """All single-reduction incidences from height m+1 down to height m."""
    strata = paths_by_height(A, i, j, zeta)
    out = []
    for gamma in strata.get(m + 1, []):
        for w in height_data(gamma).l_set:
            gp = reduce_path(gamma, w)
            assert height_data(gp).h == m
            out.append(IncidenceEntry(gamma, w, gp, wedge_sign(gamma, w)))
    return out


# ---------------------------------------------------------------------------
# circumnavigation variant (closed convex polygon with the chord)


def enumerate_circum_paths(A: Config, i: int, j: int) -> list[list[int]]:
    """Paths gamma from w_i to w_j such that gamma together with the chord
    [w_i, w_j] bounds a convex polygon; requires the chord to be an edge of
    the hull of A.  The two-vertex path [i, j] is always included."""
    from .errors import EdgePrecondition
    from .geometry import convex_hull

    hull = convex_hull(A)
    edges = {
        frozenset((a, b)) for a, b in zip(hull, hull[1:] + hull[:1])
    }
    if frozenset((i, j)) not in edges:
        raise EdgePrecondition(f"[{i},{j}] is not a hull edge")
    results = [[i, j]]
    others = [w for w in range(len(A)) if w not in (i, j)]
    for r in range(1, len(others) + 1):
        for sub in itertools.combinations(others, r):
            cycle_pts = (i, j) + sub
            cyc = convex_hull(Config([A[t] for t in cycle_pts]))
            if len(cyc) != len(cycle_pts):
                continue  # some chosen point not a corner: not convex position
            labels = [cycle_pts[t] for t in cyc]
            pos_i, pos_j = labels.index(i), labels.index(j)
            n = len(labels)
            if (pos_i - pos_j) % n != 1 and (pos_j - pos_i) % n != 1:
                continue  # chord is a diagonal, not an edge
            # walk from i to j the long way around the cycle
            if (pos_j - pos_i) % n == 1:
                walk = [labels[(pos_i - t) % n] for t in range(n)]
            else:
                walk = [labels[(pos_i + t) % n] for t in range(n)]
            results.append(walk)
    results.sort()
    return results
