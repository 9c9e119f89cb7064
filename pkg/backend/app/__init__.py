"""Mission planner application package."""
