"""Homology of connected sums of sphere products, and the rational-Hurewicz
window where homology ranks double as homotopy ranks.

All spaces here (products of spheres of dimension >= 2 and their connected
sums) have torsion-free homology, so graded ranks are a lossless record.
Reduced ranks in middle degrees add over connected-sum summands: puncturing a
summand removes exactly its top class, and the collapse cofibration peels
summands off one at a time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "SphereProduct",
    "ConnectedSumSpec",
    "GradedRanks",
    "product_homology",
    "connected_sum_homology",
    "poincare_check",
    "euler_characteristic",
    "hurewicz_window",
    "rational_homotopy_rank",
    "parse_connected_sum",
    "format_connected_sum",
]


@dataclass(frozen=True, order=True)
class SphereProduct:
    """S^m x S^n with 2 <= m <= n (factors are stored sorted)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m > self.n:
            lo, hi = self.n, self.m
            object.__setattr__(self, "m", lo)
            object.__setattr__(self, "n", hi)
        if self.m < 2:
            raise ValueError(
                f"sphere factors must have dimension >= 2, got S^{self.m}"
            )

    @property
    def total_dim(self) -> int:
        return self.m + self.n

    def __str__(self) -> str:
        return f"S{self.m}xS{self.n}"


@dataclass(frozen=True)
class ConnectedSumSpec:
    """Connected sum of sphere products: (multiplicity, factor) summands.

    Summands are normalized on construction (merged by factor and sorted),
    so two specs listing the same summands in any order compare equal.  All
    factors must share one total dimension.
    """

    summands: tuple[tuple[int, SphereProduct], ...]

    def __post_init__(self) -> None:
        if not self.summands:
            raise ValueError("a connected sum needs at least one summand")
        merged: dict[SphereProduct, int] = {}
        for mult, factor in self.summands:
            if mult < 1:
                raise ValueError(f"multiplicities are positive, got {mult}")
            merged[factor] = merged.get(factor, 0) + mult
        dims = {factor.total_dim for factor in merged}
        if len(dims) > 1:
            raise ValueError(
                f"summands must share one total dimension, got {sorted(dims)}"
            )
        normalized = tuple((merged[f], f) for f in sorted(merged))
        object.__setattr__(self, "summands", normalized)

    @property
    def total_dim(self) -> int:
        return self.summands[0][1].total_dim


@dataclass(frozen=True)
class GradedRanks:
    """Free ranks by degree for a connected space; `top` is the formal top
    dimension.  Only nonzero ranks are stored."""

    ranks: dict[int, int]
    top: int

    def __post_init__(self) -> None:
        cleaned = {k: v for k, v in self.ranks.items() if v}
        object.__setattr__(self, "ranks", cleaned)
        for k, v in cleaned.items():
            if not 0 <= k <= self.top:
                raise ValueError(f"degree {k} outside 0..{self.top}")
            if v < 0:
                raise ValueError(f"ranks are nonnegative, got {v} in degree {k}")
        if cleaned.get(0, 0) != 1:
            raise ValueError("expected a connected space: rank 1 in degree 0")

    def rank(self, k: int) -> int:
        return self.ranks.get(k, 0)

    def reduced(self) -> dict[int, int]:
        """Reduced ranks: degree 0 dropped."""
        return {k: v for k, v in sorted(self.ranks.items()) if k > 0}


def product_homology(t: SphereProduct, punctured: bool = False) -> GradedRanks:
    """Homology ranks of S^m x S^n by Kuenneth; `punctured` removes the top
    class (the product minus an open disk).

    >>> product_homology(SphereProduct(6, 6)).ranks
    {0: 1, 6: 2, 12: 1}
    >>> product_homology(SphereProduct(6, 6), punctured=True).ranks
    {0: 1, 6: 2}
    """
    ranks = {0: 1}
    ranks[t.m] = ranks.get(t.m, 0) + 1
    ranks[t.n] = ranks.get(t.n, 0) + 1
    if not punctured:
        ranks[t.total_dim] = ranks.get(t.total_dim, 0) + 1
    return GradedRanks(ranks=ranks, top=t.total_dim)


def connected_sum_homology(spec: ConnectedSumSpec) -> GradedRanks:
    """Homology ranks of a connected sum of sphere products.

    Middle-degree reduced ranks are the sums of the summands' punctured
    reduced ranks; degrees 0 and D carry rank 1.

    >>> spec = parse_connected_sum("16*S5xS7 # 15*S6xS6")
    >>> connected_sum_homology(spec).ranks
    {0: 1, 5: 16, 6: 30, 7: 16, 12: 1}
    """
    D = spec.total_dim
    ranks = {0: 1, D: 1}
    for mult, factor in spec.summands:
        for k, v in product_homology(factor, punctured=True).reduced().items():
            ranks[k] = ranks.get(k, 0) + mult * v
    return GradedRanks(ranks=dict(sorted(ranks.items())), top=D)


def poincare_check(g: GradedRanks) -> bool:
    """True iff rank_k == rank_{top-k} for every degree (duality symmetry)."""
    return all(g.rank(k) == g.rank(g.top - k) for k in range(g.top + 1))


def euler_characteristic(g: GradedRanks) -> int:
    """Alternating sum of the ranks."""
    return sum((-1) ** k * v for k, v in g.ranks.items())


def hurewicz_window(g: GradedRanks) -> int:
    """Largest degree where rational homotopy ranks can be read off homology.

    For a simply connected space whose first nonzero reduced homology sits in
    degree r, rational homotopy and homology ranks agree through degree
    2r - 2.  Callers guarantee simple connectivity.
    """
    positive = [k for k in g.ranks if k > 0]
    if not positive:
        return g.top  # contractible-looking table: everything vanishes anyway
    return 2 * min(positive) - 2


def rational_homotopy_rank(g: GradedRanks, q: int) -> int:
    """Rank of pi_q tensor Q inside the rational-Hurewicz window.

    >>> M = connected_sum_homology(parse_connected_sum("16*S5xS7 # 15*S6xS6"))
    >>> rational_homotopy_rank(M, 6)
    30
    """
    if q <= 0:
        raise ValueError(f"homotopy degrees are positive, got q={q}")
    window = hurewicz_window(g)
    if q > window:
        raise ValueError(
            f"degree {q} is beyond the rational-Hurewicz window (q <= {window})"
        )
    return g.rank(q)


_SUMMAND = re.compile(r"^(?:(\d+)\*)?S(\d+)xS(\d+)$", re.IGNORECASE)


def parse_connected_sum(text: str) -> ConnectedSumSpec:
    """Parse the connected-sum grammar: summands joined by `#`, each
    `k*S<m>xS<n>`; whitespace-insensitive; `1*` may be omitted.

    >>> parse_connected_sum("S7xS5").summands
    ((1, SphereProduct(m=5, n=7)),)
    """
    squeezed = re.sub(r"\s+", "", text)
    if not squeezed:
        raise ValueError("empty connected-sum description")
    summands = []
    for part in squeezed.split("#"):
        match = _SUMMAND.match(part)
        if not match:
            raise ValueError(
                f"bad summand {part!r}: expected k*S<m>xS<n>, e.g. 16*S5xS7"
            )
        mult = int(match.group(1)) if match.group(1) else 1
        summands.append((mult, SphereProduct(int(match.group(2)), int(match.group(3)))))
    return ConnectedSumSpec(summands=tuple(summands))


def format_connected_sum(spec: ConnectedSumSpec) -> str:
    """Canonical text for a spec; parses back to an equal spec."""
    return " # ".join(f"{mult}*{factor}" for mult, factor in spec.summands)
