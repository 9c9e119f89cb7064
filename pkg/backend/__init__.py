"""Mission planner backend."""
