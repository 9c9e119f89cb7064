"""Domain services: formulas, automata, decomposition, world, planning, execution and simulation."""
