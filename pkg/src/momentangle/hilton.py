"""Sphere bookkeeping for loop spaces of wedges of odd spheres.

The loop space of a wedge of spheres splits as a product of loop spaces of
single spheres, one per basic product in the free nonassociative algebra on
the wedge summands.  The number of basic products of weight w on k generators
is the Witt number

    W(k, w) = (1/w) * sum over d | w of mu(d) * k^(w/d)

and a weight-w basic product on copies of S^n contributes a sphere of
dimension (n-1)*w + 1.  Everything here is exact integer arithmetic;
spectra are always truncated at an explicit ceiling so that out-of-range
degrees fail loudly instead of answering wrongly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import FaceRingPresentation

__all__ = [
    "SphereSpectrum",
    "WedgeModel",
    "moebius",
    "basic_product_count",
    "wedge_spectrum",
    "mixed_wedge_spectrum",
    "rational_rank_wedge",
    "borel_model",
]


def moebius(n: int) -> int:
    """The Moebius function: 1 at 1, (-1)^k on squarefree n with k prime
    factors, 0 when a square divides n.

    >>> [moebius(n) for n in (1, 2, 6, 12)]
    [1, -1, 1, 0]
    """
    if n < 1:
        raise ValueError(f"moebius is defined on positive integers, got {n}")
    count = 0
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            count += 1
        p += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def basic_product_count(k: int, w: int) -> int:
    """Witt number W(k, w): basic products of weight w on k generators.

    Always an exact nonnegative integer; the divisibility is asserted rather
    than rounded.

    >>> basic_product_count(16, 2)
    120
    >>> basic_product_count(2, 6)
    9
    """
    if k < 1 or w < 1:
        raise ValueError(f"need k >= 1 and w >= 1, got k={k}, w={w}")
    total = sum(moebius(d) * k ** (w // d) for d in _divisors(w))
    if total < 0 or total % w:
        raise ArithmeticError(f"Witt sum {total} is not a multiple of {w}")
    return total // w


def _multinomial(total: int, parts) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def _multidegree_count(vec: tuple[int, ...]) -> int:
    """Basic products with exponent vector `vec` (necklace refinement of the
    Witt formula): (1/W) * sum over d | gcd(vec) of mu(d) * (W/d)! / prod (a_i/d)!.
    """
    w = sum(vec)
    g = 0
    for a in vec:
        g = math.gcd(g, a)
    total = 0
    for d in _divisors(g):
        mu = moebius(d)
        if mu:
            total += mu * _multinomial(w // d, [a // d for a in vec if a])
    if total < 0 or total % w:
        raise ArithmeticError(f"necklace sum {total} is not a multiple of {w}")
    return total // w


@dataclass(frozen=True)
class SphereSpectrum:
    """Multiset of sphere dimensions (all odd, >= 3) with multiplicities,
    truncated at `ceiling`.  Dimensions above the ceiling are unknown, not
    zero."""

    entries: dict[int, int]
    ceiling: int

    def __post_init__(self) -> None:
        for dim, mult in self.entries.items():
            if dim % 2 == 0 or dim < 3:
                raise ValueError(f"sphere dimensions must be odd and >= 3, got {dim}")
            if dim > self.ceiling:
                raise ValueError(f"dimension {dim} exceeds ceiling {self.ceiling}")
            if mult < 1:
                raise ValueError(f"multiplicities are positive, got {mult} at {dim}")


def _check_generator_dim(dim: int) -> None:
    if dim % 2 == 0:
        raise ValueError(
            f"only wedges of odd-dimensional spheres are supported, got S^{dim}"
        )
    if dim < 3:
        raise ValueError(f"generator spheres must be simply connected, got S^{dim}")


def wedge_spectrum(count: int, sphere_dim: int, ceiling: int) -> SphereSpectrum:
    """Sphere spectrum of the loop-space splitting of a wedge of `count`
    copies of S^sphere_dim, up to the ceiling.

    >>> wedge_spectrum(16, 5, 9).entries
    {5: 16, 9: 120}
    """
    if count < 1:
        raise ValueError(f"need at least one wedge summand, got {count}")
    _check_generator_dim(sphere_dim)
    step = sphere_dim - 1
    entries: dict[int, int] = {}
    w = 1
    while step * w + 1 <= ceiling:
        mult = basic_product_count(count, w)
        if mult:
            entries[step * w + 1] = mult
        w += 1
    return SphereSpectrum(entries=entries, ceiling=ceiling)


def mixed_wedge_spectrum(dims, ceiling: int) -> SphereSpectrum:
    """Spectrum for a wedge of odd spheres of (possibly) mixed dimensions.

    Enumerates exponent vectors over the generators; a vector a contributes
    `_multidegree_count(a)` spheres of dimension sum(a_i * (dim_i - 1)) + 1.
    Agrees with `wedge_spectrum` when all dimensions coincide.
    """
    dims = tuple(dims)
    if not dims:
        raise ValueError("need at least one wedge summand")
    for dim in dims:
        _check_generator_dim(dim)
    steps = [dim - 1 for dim in dims]
    entries: dict[int, int] = {}
    vec = [0] * len(dims)

    def descend(idx: int, budget: int) -> None:
        if idx == len(dims):
            if any(vec):
                mult = _multidegree_count(tuple(vec))
                if mult:
                    dim = sum(a * s for a, s in zip(vec, steps)) + 1
                    entries[dim] = entries.get(dim, 0) + mult
            return
        a = 0
        while a * steps[idx] <= budget:
            vec[idx] = a
            descend(idx + 1, budget - a * steps[idx])
            a += 1
        vec[idx] = 0

    descend(0, ceiling - 1)
    return SphereSpectrum(entries=dict(sorted(entries.items())), ceiling=ceiling)


def rational_rank_wedge(s: SphereSpectrum, q: int) -> int:
    """Rank of the q-th rational homotopy group of the spectrum's wedge model.

    Rationally an odd sphere S^D contributes rank 1 in degree D and nothing
    else, so the rank is just the multiplicity at q.  Degrees above the
    truncation ceiling are refused.
    """
    if q > s.ceiling:
        raise ValueError(
            f"degree {q} is beyond the spectrum's truncation ceiling {s.ceiling}"
        )
    return s.entries.get(q, 0)


@dataclass(frozen=True)
class WedgeModel:
    """Wedge-of-spheres model of the Borel space of a face ring.

    Valid window: the model computes rational homotopy ranks for degrees
    3 <= q <= q_max where q_max = (minimal relation degree) - 2.  The rank in
    degree 2 is the variable count `m`, tracked apart from the spectrum.
    """

    spectrum: SphereSpectrum
    m: int
    q_max: int
    min_relation_degree: int

    def rank(self, q: int) -> int:
        """Rational homotopy rank in degree q, for q inside the valid window."""
        if not 3 <= q <= self.q_max:
            raise ValueError(
                f"wedge model is valid for 3 <= q <= {self.q_max}, got q={q}"
            )
        return rational_rank_wedge(self.spectrum, q)

    def rank_table(self) -> dict[int, int]:
        return {q: self.rank(q) for q in range(3, self.q_max + 1)}


def borel_model(F: FaceRingPresentation, rmin: int) -> WedgeModel:
    """Build the wedge model for a face ring presentation.

    Each ideal generator r contributes a sphere of dimension deg(r) - 1 (odd,
    since generators have even degree); `rmin` is the minimal relation degree
    and caps the window at q_max = rmin - 2.
    """
    if F.is_trivial:
        raise ValueError("the ideal is empty (full simplex): no wedge model")
    if len(F.generators) < 2:
        raise ValueError(
            "the wedge model needs a minimal relation degree, "
            "which needs at least two ideal generators"
        )
    q_max = rmin - 2
    dims = [g.degree - 1 for g in F.generators]
    spectrum = mixed_wedge_spectrum(dims, ceiling=q_max)
    return WedgeModel(spectrum=spectrum, m=F.m, q_max=q_max, min_relation_degree=rmin)
