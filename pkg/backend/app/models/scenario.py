"""Scenario file schema."""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

CellPair = Tuple[int, int]
Rect = Tuple[int, int, int, int]


class GridSpec(BaseModel):
    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)


class RegionSpec(BaseModel):
    """Region cells, listed one by one and/or as inclusive rectangles x0, y0, x1, y1."""
    cells: List[CellPair] = []
    rects: List[Rect] = []

    def expand(self) -> List[CellPair]:
        return _expand(self.cells, self.rects)


class RobotSpec(BaseModel):
    start: CellPair
    sensing_range: float = Field(default=2.0, ge=1.0)
    step_period: int = Field(default=1, ge=1)


class ScenarioDocument(BaseModel):
    grid: GridSpec
    obstacles: List[CellPair] = []
    walls: List[Rect] = []
    regions: Dict[str, RegionSpec]
    robots: List[RobotSpec] = Field(..., min_length=1)
    formula: Optional[str] = None
    hoa: Optional[str] = None
    atom_map: Optional[str] = None
    budget: Optional[int] = Field(default=None, ge=0)
    seed: int = Field(default=0, ge=0)
    hop_cap: Optional[int] = Field(default=None, ge=0)
    clutter: float = Field(default=0.0, ge=0.0, lt=1.0)

    @model_validator(mode="after")
    def _one_task(self) -> "ScenarioDocument":
        if (self.formula is None) == (self.hoa is None):
            raise ValueError("exactly one of formula or hoa must be given")
        return self

    def obstacle_cells(self) -> List[CellPair]:
        return _expand(self.obstacles, self.walls)


def _expand(cells: List[CellPair], rects: List[Rect]) -> List[CellPair]:
    out = list(cells)
    for x0, y0, x1, y1 in rects:
        xs = range(min(x0, x1), max(x0, x1) + 1)
        ys = range(min(y0, y1), max(y0, y1) + 1)
        out.extend((x, y) for x in xs for y in ys)
    return out
