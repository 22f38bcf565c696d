"""Simulator for a rigid-structure associative fuzzy control processor."""

from .core import Alphabet, ClassLabel, ControlWord, EtalonSet, ProcessorConfig, decode, parse_config
from .pamu import PamuMatrix, flash, init_state, match_sequence, step, finalize, indicator_match

__all__ = [
    "Alphabet", "ClassLabel", "ControlWord", "EtalonSet", "ProcessorConfig", "decode", "parse_config",
    "PamuMatrix", "flash", "init_state", "match_sequence", "step", "finalize", "indicator_match",
]
__version__ = "0.1.0"
