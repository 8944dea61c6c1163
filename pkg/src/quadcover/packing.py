"""Equal-circle packings of the unit square.

Perfect squares m = n^2 use the n x n grid of radius 1/(2n); the other counts
come from the embedded best-known catalog. External configurations can be
loaded from a small text format::

    # comment
    m r
    x1 y1
    ...
    xm ym
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from ._catalog import CATALOG
from .conic import Circle, Relation
from .errors import InvalidPacking, PackingParseError, UnsupportedCount
from .geometry import Point2

M_MIN, M_MAX = 1, 16
PACKING_TOL = 1e-9


@dataclass(frozen=True)
class PackingConfig:
    m: int
    radius: float
    centers: tuple[Point2, ...]
    source: str = "embedded"

    def circles(self) -> list[Circle]:
        return [Circle(c, self.radius) for c in self.centers]


def _sorted_centers(centers) -> tuple[Point2, ...]:
    pts = [Point2(float(x), float(y)) for x, y in centers]
    return tuple(sorted(pts, key=lambda p: (p.y, p.x)))


def validate_packing(p: PackingConfig, tol: float = PACKING_TOL) -> PackingConfig:
    """Raise InvalidPacking on the first violated containment/overlap constraint."""
    if p.m != len(p.centers):
        raise InvalidPacking(f"header says m={p.m} but {len(p.centers)} centers given")
    if not 0 < p.radius <= 0.5:
        raise InvalidPacking(f"radius {p.radius} outside (0, 0.5]")
    r = p.radius
    for i, (x, y) in enumerate(p.centers, start=1):
        if not (r - tol <= x <= 1 - r + tol and r - tol <= y <= 1 - r + tol):
            raise InvalidPacking(f"circle {i} at ({x}, {y}) protrudes from the unit square")
    for (i, c1), (j, c2) in combinations(enumerate(p.centers, start=1), 2):
        d = math.dist(c1, c2)
        if d < 2 * r - tol:
            raise InvalidPacking(f"circles {i} and {j} overlap (distance {d:.6g} < {2 * r:.6g})")
    return p


def grid_packing(n: int) -> PackingConfig:
    r = 1.0 / (2 * n)
    centers = [((2 * i + 1) * r, (2 * j + 1) * r) for j in range(n) for i in range(n)]
    return PackingConfig(n * n, r, _sorted_centers(centers))


@lru_cache(maxsize=None)
def get_packing(m: int) -> PackingConfig:
    if not isinstance(m, int) or not M_MIN <= m <= M_MAX:
        raise UnsupportedCount(f"no embedded packing for m={m!r} (supported: {M_MIN}..{M_MAX})")
    n = math.isqrt(m)
    if n * n == m:
        return validate_packing(grid_packing(n))
    r, centers = CATALOG[m]
    return validate_packing(PackingConfig(m, r, _sorted_centers(centers)))


def parse_packing(text: str, validate: bool = True) -> PackingConfig:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PackingParseError(f"line {lineno}: expected 2 fields, got {len(fields)}")
        try:
            rows.append((lineno, float(fields[0]), float(fields[1])))
        except ValueError:
            raise PackingParseError(f"line {lineno}: not a number: {line!r}") from None
    if not rows:
        raise PackingParseError("empty packing file")
    lineno, m_raw, r = rows[0]
    if m_raw != int(m_raw) or m_raw < 1:
        raise PackingParseError(f"line {lineno}: circle count must be a positive integer")
    m = int(m_raw)
    if len(rows) - 1 != m:
        raise PackingParseError(f"header declares {m} circles, found {len(rows) - 1}")
    if not all(math.isfinite(v) for _, x, y in rows for v in (x, y)):
        raise PackingParseError("non-finite value")
    p = PackingConfig(m, r, _sorted_centers((x, y) for _, x, y in rows[1:]), source="external")
    return validate_packing(p) if validate else p


def load_packing_file(path, validate: bool = True) -> PackingConfig:
    """Read a packing file.

    ``validate=False`` skips the containment/overlap checks so that a
    verification run can report a broken configuration instead of refusing it.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise PackingParseError(f"{path}: {exc}") from None
    return parse_packing(text, validate=validate)


def format_packing(p: PackingConfig) -> str:
    lines = [f"{p.m} {p.radius!r}"]
    lines += [f"{x!r} {y!r}" for x, y in p.centers]
    return "\n".join(lines) + "\n"


def packing_density(p: PackingConfig) -> float:
    return p.m * math.pi * p.radius**2


def circle_relations(p: PackingConfig, tol: float = PACKING_TOL) -> dict[tuple[int, int], Relation]:
    """Pairwise relation of the packed circles keyed by 0-based index pairs."""
    out = {}
    for (i, c1), (j, c2) in combinations(enumerate(p.centers), 2):
        gap = math.dist(c1, c2) - 2 * p.radius
        if abs(gap) <= tol:
            out[(i, j)] = Relation.TANGENT
        else:
            out[(i, j)] = Relation.DISJOINT if gap > 0 else Relation.OVERLAPPING
    return out
