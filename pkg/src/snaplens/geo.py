"""Hexagonal binning of geotagged sentiment and local hot/cold-spot
detection.

Pointy-top hexagons addressed by axial (q, r) coordinates over a
planar lon/lat extent (degrees, no projection - adequate for
visualization scale).  Each point maps to exactly one cell through
cube rounding of its fractional axial coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateBBox, TooFewCells

SQRT3 = math.sqrt(3.0)

# Two-sided standard normal quantiles for the 90/95/99% classes.
Z_90 = 1.645
Z_95 = 1.96
Z_99 = 2.576

HOTSPOT_CLASSES = ("cold99", "cold95", "cold90", "ns", "hot90", "hot95", "hot99", "empty")

AXIAL_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


@dataclass
class HexCell:
    q: int
    r: int
    center: tuple[float, float]  # (lon, lat)
    value: Optional[float] = None
    count: int = 0
    z: Optional[float] = None
    cls: str = "empty"
    _sum: float = field(default=0.0, repr=False)
    _wsum: float = field(default=0.0, repr=False)


@dataclass
class HexGrid:
    bbox: tuple[float, float, float, float]  # (min_lon, min_lat, max_lon, max_lat)
    cell_size: float                         # circumradius in degrees
    cells: dict[tuple[int, int], HexCell]
    orientation: str = "pointy"
    skipped_points: int = 0

    def data_cells(self) -> list[HexCell]:
        return [c for c in self.cells.values() if c.count > 0]


def axial_to_xy(q: float, r: float, size: float) -> tuple[float, float]:
    return size * SQRT3 * (q + r / 2.0), size * 1.5 * r


def xy_to_axial(x: float, y: float, size: float) -> tuple[float, float]:
    return (SQRT3 / 3.0 * x - y / 3.0) / size, (2.0 / 3.0 * y) / size


def axial_round(qf: float, rf: float) -> tuple[int, int]:
    """Cube rounding: round the three cube coordinates and repair the
    one with the largest error so x + y + z = 0 holds."""
    xf, zf = qf, rf
    yf = -xf - zf
    x, y, z = round(xf), round(yf), round(zf)
    dx, dy, dz = abs(x - xf), abs(y - yf), abs(z - zf)
    if dx > dy and dx > dz:
        x = -y - z
    elif dy > dz:
        y = -x - z
    else:
        z = -x - y
    return int(x), int(z)


def make_hex_grid(bbox: Sequence[float], cell_size: float) -> HexGrid:
    """Pointy-top hex grid whose cells jointly cover the bbox.

    Cells are enumerated deterministically (r ascending, then q); the
    grid includes every cell some bbox point can round to, which means
    all cells whose center lies within one circumradius of the extent.
    """
    min_lon, min_lat, max_lon, max_lat = bbox
    if not (min_lon < max_lon and min_lat < max_lat):
        raise DegenerateBBox(f"bbox {tuple(bbox)} is degenerate")
    if cell_size <= 0:
        raise DegenerateBBox(f"cell_size must be positive, got {cell_size}")

    width = max_lon - min_lon
    height = max_lat - min_lat
    margin = cell_size * (1.0 + 1e-9)

    cells: dict[tuple[int, int], HexCell] = {}
    r_lo = math.floor((-margin) / (1.5 * cell_size))
    r_hi = math.ceil((height + margin) / (1.5 * cell_size))
    for r in range(r_lo, r_hi + 1):
        y = 1.5 * cell_size * r
        if not -margin <= y <= height + margin:
            continue
        # x = sqrt(3) * size * (q + r/2) must land within the margin.
        q_lo = math.floor((-margin) / (SQRT3 * cell_size) - r / 2.0)
        q_hi = math.ceil((width + margin) / (SQRT3 * cell_size) - r / 2.0)
        for q in range(q_lo, q_hi + 1):
            x, _ = axial_to_xy(q, r, cell_size)
            if not -margin <= x <= width + margin:
                continue
            cells[(q, r)] = HexCell(q=q, r=r, center=(min_lon + x, min_lat + y))
    return HexGrid(bbox=(min_lon, min_lat, max_lon, max_lat),
                   cell_size=cell_size, cells=cells)


def point_to_cell(grid: HexGrid, lat: float, lon: float) -> tuple[int, int]:
    """Axial coordinates of the unique cell containing the point."""
    min_lon, min_lat, _, _ = grid.bbox
    qf, rf = xy_to_axial(lon - min_lon, lat - min_lat, grid.cell_size)
    return axial_round(qf, rf)


def spatial_join(grid: HexGrid,
                 scored_docs: Sequence[tuple[tuple[float, float], float]],
                 weights: Optional[Sequence[float]] = None) -> HexGrid:
    """Assign each (geotag, score) pair to its cell and fill value/count.

    ``value`` is the plain mean of the joined scores, or the weighted
    mean when per-document weights are supplied.  Points outside the
    bbox are skipped and counted in ``grid.skipped_points``.
    """
    min_lon, min_lat, max_lon, max_lat = grid.bbox
    if weights is None:
        weights = [1.0] * len(scored_docs)
    elif len(weights) != len(scored_docs):
        raise ValueError("weights must match scored_docs in length")

    for ((lat, lon), score), weight in zip(scored_docs, weights):
        if not (min_lon <= lon <= max_lon and min_lat <= lat <= max_lat):
            grid.skipped_points += 1
            continue
        key = point_to_cell(grid, lat, lon)
        cell = grid.cells[key]
        cell.count += 1
        cell._sum += weight * score
        cell._wsum += weight
        cell.value = cell._sum / cell._wsum
        if cell.cls == "empty":
            cell.cls = "ns"
    return grid


@dataclass(frozen=True)
class WeightsMatrix:
    """Binary contiguity weights over the cells that hold data.

    Row i lists the data-cell indices adjacent to cell i, including i
    itself; the implied matrix is symmetric with a unit diagonal.
    """

    n: int
    keys: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...]

    def dense(self) -> np.ndarray:
        w = np.zeros((self.n, self.n))
        for i, row in enumerate(self.neighbors):
            w[i, list(row)] = 1.0
        return w


def contiguity_weights(grid: HexGrid) -> WeightsMatrix:
    """Self-plus-six-adjacent binary weights over cells with data."""
    keys = [key for key, cell in grid.cells.items() if cell.count > 0]
    index = {key: i for i, key in enumerate(keys)}
    rows = []
    for q, r in keys:
        row = [index[(q, r)]]
        for dq, dr in AXIAL_NEIGHBORS:
            j = index.get((q + dq, r + dr))
            if j is not None:
                row.append(j)
        rows.append(tuple(sorted(row)))
    return WeightsMatrix(n=len(keys), keys=tuple(keys), neighbors=tuple(rows))


def gi_star(grid: HexGrid, weights: Optional[WeightsMatrix] = None) -> HexGrid:
    """Fill the local Gi* z-score for every cell with data.

    Only data cells enter n, the global mean/deviation and the neighbor
    sums.  A zero-variance field (and any cell whose denominator
    vanishes because its neighborhood spans all data cells) has local
    sums exactly equal to their expectation, so those z are 0.
    """
    if weights is None:
        weights = contiguity_weights(grid)
    n = weights.n
    if n < 2:
        raise TooFewCells(f"need >= 2 cells with data, got {n}")

    x = np.array([grid.cells[key].value for key in weights.keys], dtype=float)
    if np.ptp(x) == 0.0:
        # Exactly uniform: every local sum equals its expectation.
        for key in weights.keys:
            grid.cells[key].z = 0.0
        return grid
    x_bar = float(x.mean())
    s = math.sqrt(max(float(np.mean(x * x) - x_bar * x_bar), 0.0))

    for i, key in enumerate(weights.keys):
        nbrs = list(weights.neighbors[i])
        w_i = float(len(nbrs))
        # Binary weights: sum w_ij = sum w_ij^2 = neighborhood size.
        spread = (n * w_i - w_i * w_i) / (n - 1)
        denom = s * math.sqrt(spread) if spread > 0 else 0.0
        if denom == 0.0:
            z = 0.0
        else:
            z = (float(x[nbrs].sum()) - x_bar * w_i) / denom
        grid.cells[key].z = z
    return grid


def classify_hotspots(grid: HexGrid) -> HexGrid:
    """Map z to significance classes: |z| >= 2.576 -> 99%, >= 1.96 ->
    95%, >= 1.645 -> 90%, else ns; positive hot, negative cold."""
    for cell in grid.cells.values():
        if cell.count == 0:
            cell.cls = "empty"
            continue
        z = cell.z
        if z is None or abs(z) < Z_90:
            cell.cls = "ns"
            continue
        side = "hot" if z > 0 else "cold"
        if abs(z) >= Z_99:
            cell.cls = f"{side}99"
        elif abs(z) >= Z_95:
            cell.cls = f"{side}95"
        else:
            cell.cls = f"{side}90"
    return grid


def cell_polygon(grid: HexGrid, cell: HexCell) -> list[list[float]]:
    """Closed lon/lat ring of the cell's six corners (pointy-top)."""
    lon_c, lat_c = cell.center
    ring = []
    for k in range(6):
        angle = math.radians(60.0 * k + 30.0)
        ring.append([lon_c + grid.cell_size * math.cos(angle),
                     lat_c + grid.cell_size * math.sin(angle)])
    ring.append(list(ring[0]))
    return ring


def grid_to_geojson(grid: HexGrid) -> dict:
    """GeoJSON-style FeatureCollection with one polygon per cell."""
    features = []
    for cell in grid.cells.values():
        features.append({
            "type": "Feature",
            "geometry": {"type": "Polygon", "coordinates": [cell_polygon(grid, cell)]},
            "properties": {
                "q": cell.q,
                "r": cell.r,
                "value": cell.value,
                "count": cell.count,
                "z": cell.z,
                "cls": cell.cls,
            },
        })
    return {"type": "FeatureCollection", "features": features}
