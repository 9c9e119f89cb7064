"""Buchi automata: translation, HOA import, symbol enumeration, pruning and export."""
from .dot import export_dot
from .hoa import HoaImporter, import_hoa, load_atom_map
from .nba import Nba, Transition, state_key
from .symbols import SymbolSet, cube_is_feasible, enumerate_feasible_symbols, has_feasible_symbol, prune
from .tableau import TableauTranslator, translate

__all__ = [
    'Nba', 'Transition', 'state_key', 'translate', 'TableauTranslator', 'import_hoa',
    'HoaImporter', 'load_atom_map', 'SymbolSet', 'enumerate_feasible_symbols',
    'has_feasible_symbol', 'cube_is_feasible', 'prune', 'export_dot',
]
