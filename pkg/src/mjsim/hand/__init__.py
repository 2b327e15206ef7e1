from .shanten import (
    counts_from_tiles,
    shanten,
    shanten_kokushi,
    shanten_seven_pairs,
    shanten_standard,
    waits,
)
from .decompose import Decomposition, decompose_wins
from .tables import ShantenTables, build_tables, get_tables, load_tables, save_tables

__all__ = [
    "Decomposition",
    "ShantenTables",
    "build_tables",
    "counts_from_tiles",
    "decompose_wins",
    "get_tables",
    "load_tables",
    "save_tables",
    "shanten",
    "shanten_kokushi",
    "shanten_seven_pairs",
    "shanten_standard",
    "waits",
]
