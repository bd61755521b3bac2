"""Simplicial complexes and their Stanley-Reisner presentations.

A complex on vertex set 1..m is carried either by its facet list or by a
minimal-non-face list; both determine the same membership predicate.  The
face ring presentation is the polynomial ring on degree-2 variables v_1..v_m
modulo the squarefree monomial ideal generated by the minimal non-faces.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .gale import CyclicParams, as_subset, is_face as _cyclic_is_face

__all__ = [
    "Monomial",
    "SimplicialComplex",
    "FaceRingPresentation",
    "from_facets",
    "from_nonfaces",
    "from_cyclic",
    "from_polygon",
    "minimal_nonfaces",
    "face_ring",
    "parse_complex",
]


@dataclass(frozen=True)
class Monomial:
    """Squarefree monomial in v_1..v_m, recorded by its support; |v_i| = 2."""

    support: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise ValueError("squarefree monomials here have nonempty support")
        if list(self.support) != sorted(set(self.support)):
            raise ValueError(f"support must be strictly increasing, got {self.support}")
        if self.support[0] < 1:
            raise ValueError(f"variable indices start at 1, got {self.support}")

    @property
    def degree(self) -> int:
        return 2 * len(self.support)

    def __str__(self) -> str:
        return "*".join(f"v{i}" for i in self.support)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on 1..m backed by facets or by minimal non-faces.

    Exactly one of `facets` / `nonfaces` is set; `source` records where the
    complex came from.  Every vertex must be a face (no ghost vertices);
    the factory functions enforce this.
    """

    m: int
    facets: tuple[tuple[int, ...], ...] | None = None
    nonfaces: tuple[tuple[int, ...], ...] | None = None
    source: str = "explicit"

    def __post_init__(self) -> None:
        if (self.facets is None) == (self.nonfaces is None):
            raise ValueError("exactly one of facets/nonfaces must be given")
        if self.m < 1:
            raise ValueError(f"vertex count must be positive, got {self.m}")

    def is_face(self, members) -> bool:
        """Membership test; validates that members lie in 1..m.

        The empty set is always a face.
        """
        xs = as_subset(members, self.m)
        if self.facets is not None:
            s = set(xs)
            return any(s.issubset(f) for f in self.facets)
        s = set(xs)
        return all(not set(nf).issubset(s) for nf in self.nonfaces)

    def dim(self) -> int:
        """Dimension = max face cardinality - 1.

        For non-face-backed complexes this is a subset search, fine at the
        vertex counts this library is used at (m <= ~20).
        """
        if self.facets is not None:
            return max(len(f) for f in self.facets) - 1
        for k in range(self.m, 0, -1):
            if any(self.is_face(c) for c in combinations(range(1, self.m + 1), k)):
                return k - 1
        return -1


def _canon_subsets(subsets, m: int) -> list[tuple[int, ...]]:
    return sorted({as_subset(s, m) for s in subsets})


def from_facets(m: int, facets, source: str = "facets") -> SimplicialComplex:
    """Build a complex from its facet list.

    Non-maximal entries are dropped; every vertex must appear in some facet.
    """
    fs = _canon_subsets(facets, m)
    if any(not f for f in fs):
        raise ValueError("facets must be nonempty")
    maximal = [
        f for f in fs
        if not any(f != g and set(f).issubset(g) for g in fs)
    ]
    covered = set().union(*map(set, maximal)) if maximal else set()
    missing = set(range(1, m + 1)) - covered
    if missing:
        raise ValueError(f"ghost vertices (in no facet): {sorted(missing)}")
    return SimplicialComplex(m=m, facets=tuple(maximal), source=source)


def from_nonfaces(m: int, nonfaces, source: str = "nonfaces") -> SimplicialComplex:
    """Build a complex from a non-face list.

    The list is reduced to its minimal elements (the ideal generators).
    Singleton non-faces are rejected: they would delete a vertex.
    """
    nfs = _canon_subsets(nonfaces, m)
    if any(not nf for nf in nfs):
        raise ValueError("the empty set is a face of every complex here")
    if any(len(nf) == 1 for nf in nfs):
        bad = [nf[0] for nf in nfs if len(nf) == 1]
        raise ValueError(f"singleton non-faces would leave ghost vertices: {bad}")
    minimal = [
        nf for nf in nfs
        if not any(nf != other and set(other).issubset(nf) for other in nfs)
    ]
    return SimplicialComplex(m=m, nonfaces=tuple(sorted(minimal)), source=source)


def from_cyclic(p: CyclicParams) -> SimplicialComplex:
    """Boundary complex of C(n, d) on m = n vertices.

    Facets are the d-subsets passing the evenness criterion; faces are then
    exactly the criterion's faces (polytope boundaries are pure and closed
    under subsets).
    """
    facets = [
        c for c in combinations(range(1, p.n + 1), p.d) if _cyclic_is_face(c, p)
    ]
    return from_facets(p.n, facets, source=f"cyclic({p.n},{p.d})")


def from_polygon(m: int) -> SimplicialComplex:
    """The m-cycle: singletons and consecutive pairs {i, i+1 mod m} are faces.

    Minimal non-faces are the non-adjacent pairs.  Requires m >= 4 so the
    ideal is nonempty.
    """
    if m < 4:
        raise ValueError(f"polygon complexes need m >= 4 vertices, got {m}")
    edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
    return from_facets(m, edges, source=f"polygon({m})")


def minimal_nonfaces(K: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal non-faces of K, lexicographically sorted.

    A minimal non-face has every proper subset a face; the search only has
    to scan cardinalities 2 .. dim(K)+2.
    """
    if K.nonfaces is not None:
        return list(K.nonfaces)
    out: list[tuple[int, ...]] = []
    for card in range(2, K.dim() + 3):
        for s in combinations(range(1, K.m + 1), card):
            if K.is_face(s):
                continue
            if all(K.is_face(s[:i] + s[i + 1 :]) for i in range(len(s))):
                out.append(s)
    return sorted(out)


@dataclass(frozen=True)
class FaceRingPresentation:
    """Variables v_1..v_m plus the minimal-non-face generators of the ideal.

    Generators are lexicographically sorted and pairwise incomparable under
    divisibility.  An empty generator list (full simplex) is legal but
    flagged via `is_trivial`; downstream relation/wedge machinery refuses it.
    """

    m: int
    generators: tuple[Monomial, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"variable count must be positive, got {self.m}")
        supports = [g.support for g in self.generators]
        if supports != sorted(supports):
            raise ValueError("generators must be lexicographically sorted")
        for a, b in combinations(supports, 2):
            if set(a).issubset(b) or set(b).issubset(a):
                raise ValueError(f"generators must be incomparable: {a} vs {b}")
        if supports and supports[-1][-1] > self.m:
            raise ValueError("generator mentions a variable beyond v_m")

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(g.degree for g in self.generators).items()))


def face_ring(K: SimplicialComplex) -> FaceRingPresentation:
    """Stanley-Reisner presentation of K: one generator per minimal non-face."""
    gens = tuple(Monomial(s) for s in minimal_nonfaces(K))
    return FaceRingPresentation(m=K.m, generators=gens)


def parse_complex(text: str, source: str = "text") -> SimplicialComplex:
    """Parse the plain-text complex format.

    Header line `vertices m`, then a line `facets` or `nonfaces`, then one
    subset per line as space-separated integers.  Blank lines and `#`
    comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty complex description")
    head = lines[0].split()
    if len(head) != 2 or head[0].lower() != "vertices":
        raise ValueError(f"expected header 'vertices <m>', got {lines[0]!r}")
    try:
        m = int(head[1])
    except ValueError:
        raise ValueError(f"vertex count must be an integer, got {head[1]!r}") from None
    if len(lines) < 2 or lines[1].lower() not in ("facets", "nonfaces"):
        raise ValueError("expected a 'facets' or 'nonfaces' section after the header")
    kind = lines[1].lower()
    subsets = []
    for ln in lines[2:]:
        try:
            subsets.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise ValueError(f"bad subset line {ln!r}") from None
    if kind == "facets":
        return from_facets(m, subsets, source=source)
    return from_nonfaces(m, subsets, source=source)
