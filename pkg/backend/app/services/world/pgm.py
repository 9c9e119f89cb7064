"""Plain PGM (P2) snapshots of the belief map."""
from pathlib import Path

from .grid import OccupancyGrid

FREE = 0
OCCUPIED = 255


def to_pgm(m: OccupancyGrid) -> str:
    """Row y=0 first, one value per cell: 0 free, 255 occupied."""
    rows = [
        " ".join(str(OCCUPIED if m.occupied[x, y] else FREE) for x in range(m.width))
        for y in range(m.height)
    ]
    return "\n".join(["P2", f"{m.width} {m.height}", str(OCCUPIED)] + rows) + "\n"


def write_pgm(m: OccupancyGrid, path: Path) -> None:
    Path(path).write_text(to_pgm(m))
