"""Ground-truth environment: grid size, obstacles and regions of interest."""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Mapping, Optional, Tuple

import numpy as np

from ...exceptions import ScenarioError

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]

NO_REGION = -1


@dataclass(frozen=True, eq=False)
class Environment:
    """Static world. Arrays are indexed [x, y] with shape (width, height)."""
    width: int
    height: int
    obstacles: FrozenSet[Cell]
    regions: Mapping[str, FrozenSet[Cell]]
    occupied: np.ndarray = field(init=False, repr=False)
    region_index: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ScenarioError(f"grid must be at least 1x1, got {self.width}x{self.height}", "grid")
        object.__setattr__(self, "obstacles", frozenset(self.obstacles))
        object.__setattr__(self, "regions", {k: frozenset(v) for k, v in sorted(self.regions.items())})
        self._validate()
        occupied = np.zeros((self.width, self.height), dtype=bool)
        for x, y in self.obstacles:
            occupied[x, y] = True
        index = np.full((self.width, self.height), NO_REGION, dtype=np.int32)
        for i, name in enumerate(self.region_names):
            for x, y in self.regions[name]:
                index[x, y] = i
        object.__setattr__(self, "occupied", occupied)
        object.__setattr__(self, "region_index", index)

    def _validate(self) -> None:
        for cell in self.obstacles:
            if not self.in_bounds(cell):
                raise ScenarioError(f"obstacle {cell} is out of bounds", "obstacles")
        owner = {}
        for name, cells in self.regions.items():
            if not cells:
                raise ScenarioError(f"region {name} is empty", f"regions.{name}")
            for cell in sorted(cells):
                if not self.in_bounds(cell):
                    raise ScenarioError(f"cell {cell} is out of bounds", f"regions.{name}")
                if cell in self.obstacles:
                    raise ScenarioError(f"region/obstacle overlap at {cell}", f"regions.{name}")
                if cell in owner:
                    raise ScenarioError(f"regions {owner[cell]} and {name} overlap at {cell}", f"regions.{name}")
                owner[cell] = name

    @property
    def region_names(self) -> Tuple[str, ...]:
        return tuple(self.regions)

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def is_obstacle(self, cell: Cell) -> bool:
        return bool(self.occupied[cell])

    def region_at(self, cell: Cell) -> Optional[str]:
        i = int(self.region_index[cell])
        return None if i == NO_REGION else self.region_names[i]

    def region_mask(self, names: Iterable[str]) -> np.ndarray:
        """Boolean mask of the cells belonging to any of the named regions."""
        wanted = set(names)
        ids = [i for i, name in enumerate(self.region_names) if name in wanted]
        return np.isin(self.region_index, ids)

    def with_clutter(self, density: float, rng: np.random.Generator, keep: Iterable[Cell] = ()) -> "Environment":
        """Copy with extra random obstacles on a `density` share of the free cells.

        Region cells and the cells in `keep` never receive clutter.
        """
        if not 0.0 <= density < 1.0:
            raise ScenarioError(f"clutter density must be in [0, 1), got {density}", "clutter")
        free = ~self.occupied & (self.region_index == NO_REGION)
        for x, y in keep:
            free[x, y] = False
        candidates = np.argwhere(free)
        count = int(round(density * len(candidates)))
        if count == 0:
            return self
        picked = rng.choice(len(candidates), size=count, replace=False)
        extra = {(int(x), int(y)) for x, y in candidates[np.sort(picked)]}
        logger.info(f"Placed {len(extra)} clutter obstacles")
        return Environment(self.width, self.height, self.obstacles | extra, self.regions)
