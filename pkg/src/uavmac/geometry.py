"""Coverage-disk geometry and device population law.

The collector's antenna footprint is a sharp disk of radius R moving along
a straight line at speed v. A device at perpendicular offset y from the
track stays covered for the chord time 2*sqrt(R^2 - y^2)/v, so equal-chord
bands parallel to the track group devices by how many full chain traversals
fit into their coverage window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoClusterError, OutsideCoverageError

# relative slack for float floor comparisons at exact multiples
_FLOOR_EPS = 1e-12


def communication_duration(y_m: float, radius_m: float, speed_mps: float) -> float:
    """Coverage time (s) of a device at offset y: 2*sqrt(R^2 - y^2)/v."""
    if abs(y_m) > radius_m:
        raise OutsideCoverageError(f"|y|={abs(y_m)} exceeds radius {radius_m}")
    return 2.0 * math.sqrt(radius_m**2 - y_m**2) / speed_mps


def traversal_count(duration_s, delta_s) -> int:
    """Number of whole chain traversals fitting in ``duration_s``: floor(T/Delta).

    Rational inputs (int/Fraction) are compared exactly; floats get a 1e-12
    relative guard so exact multiples do not lose a count to rounding.
    """
    if delta_s <= 0:
        raise ValueError("delta must be positive")
    if duration_s < 0:
        raise ValueError("duration must be nonnegative")
    if isinstance(duration_s, (int, Fraction)) and isinstance(delta_s, (int, Fraction)):
        return int(Fraction(duration_s) / Fraction(delta_s))
    ratio = duration_s / delta_s
    return int(math.floor(ratio * (1.0 + _FLOOR_EPS)))


def _half_strip_area(y: float, radius: float) -> float:
    """G(y) = y*sqrt(R^2-y^2) + R^2*asin(y/R); the disk area with |Y| <= y
    is 2*G(y)."""
    y = min(y, radius)
    return y * math.sqrt(max(radius**2 - y**2, 0.0)) + radius**2 * math.asin(y / radius)


@dataclass(frozen=True)
class ClusterBand:
    """One band-shaped cluster: devices with |y| in (y_inner, y_outer] all
    complete exactly ``traversal_count`` chain passes."""

    index: int
    traversal_count: int
    duration_s: float          # i * Delta
    y_inner_m: float
    y_outer_m: float
    area_m2: float             # both half-planes


@dataclass(frozen=True)
class ClusterPartition:
    n_clusters: int
    bands: tuple[ClusterBand, ...]
    excluded_edge_area_m2: float   # rim where coverage is shorter than Delta
    delta_s: float
    radius_m: float

    @property
    def areas(self):
        return [b.area_m2 for b in self.bands]

    @property
    def traversal_counts(self):
        return [b.traversal_count for b in self.bands]


def partition(radius_m: float, speed_mps: float, delta_s: float) -> ClusterPartition:
    """Split the disk into N = floor(2R/(v*Delta)) equal-chord-step bands.

    Band boundaries: y(k) = sqrt(R^2 - (k*v*Delta/2)^2), clamped to 0 once
    k*v*Delta exceeds the diameter. Cluster i (i = 1..N, m_i = i) occupies
    |y| in (y(i+1), y(i)]; the rim (y(1), R] holds devices whose coverage
    window is shorter than one traversal and is excluded from the chain
    model (reported separately).
    """
    if radius_m <= 0 or speed_mps <= 0 or delta_s <= 0:
        raise ValueError("radius, speed and delta must be positive")
    step = speed_mps * delta_s  # chord-length decrement per traversal (m)
    n = traversal_count(2.0 * radius_m, step)
    if n == 0:
        raise NoClusterError(
            f"coverage pass 2R/v shorter than one traversal "
            f"(2R={2 * radius_m} m, v*Delta={step} m)")

    def boundary(k: int) -> float:
        arg = radius_m**2 - (k * step / 2.0) ** 2
        return math.sqrt(arg) if arg > 0.0 else 0.0

    ys = [boundary(k) for k in range(1, n + 2)]  # y(1) .. y(N+1)
    bands = []
    for i in range(1, n + 1):
        outer = ys[i - 1]
        inner = ys[i] if i < n else 0.0
        area = 2.0 * (_half_strip_area(outer, radius_m)
                      - _half_strip_area(inner, radius_m))
        bands.append(ClusterBand(index=i, traversal_count=i,
                                 duration_s=i * delta_s,
                                 y_inner_m=inner, y_outer_m=outer,
                                 area_m2=area))
    rim = math.pi * radius_m**2 - 2.0 * _half_strip_area(ys[0], radius_m)
    return ClusterPartition(n_clusters=n, bands=tuple(bands),
                            excluded_edge_area_m2=rim,
                            delta_s=delta_s, radius_m=radius_m)


def cluster_of_offset(part: ClusterPartition, y_m: float) -> int:
    """Cluster index (1..N) containing offset y, or 0 for the excluded rim."""
    a = abs(y_m)
    if a > part.radius_m:
        raise OutsideCoverageError(f"|y|={a} exceeds radius {part.radius_m}")
    for band in part.bands:
        if a > band.y_inner_m:
            return band.index if a <= band.y_outer_m else 0
    return part.n_clusters  # y == 0 falls in the innermost band


def population_pmf(density_per_m2: float, area_m2: float, n: int) -> float:
    """Poisson law of the cluster population: f(n) = (rho*A)^n e^{-rho*A} / n!.

    Evaluated in log space so large n does not overflow.
    """
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    if density_per_m2 < 0 or area_m2 < 0:
        raise ValueError("density and area must be nonnegative")
    lam = density_per_m2 * area_m2
    if lam == 0.0:
        return 1.0 if n == 0 else 0.0
    return math.exp(n * math.log(lam) - lam - math.lgamma(n + 1))


def poisson_truncation(lam: float, tail_eps: float) -> int:
    """Smallest K with sum_{n=0}^{K} f(n) >= 1 - tail_eps.

    Terms are accumulated iteratively (p_{n+1} = p_n * lam/(n+1)) so the
    sum is overflow-free for any lam.
    """
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    if lam == 0.0:
        return 0
    p = math.exp(-lam)
    total = p
    n = 0
    while total < 1.0 - tail_eps:
        n += 1
        p *= lam / n
        total += p
        if n > 100 * (lam + 10):  # unreachable fail-safe
            break
    return n
