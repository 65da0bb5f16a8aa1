"""Exact arithmetic, Horadam sequences and a verifiable catalog of weighted-sum identities."""

from .errors import (
    ConfigError,
    DivisionByZero,
    HoradamError,
    IndexGuardExceeded,
    ParseError,
    PreconditionUnmet,
    UnknownIdentity,
    UnknownPreset,
)
from .numeric import GaussianRational, format_scalar, parse_scalar
from .sequence import HoradamParams, HoradamSequence, SequenceTriple, preset, term, term_fast

__all__ = [
    "ConfigError",
    "DivisionByZero",
    "GaussianRational",
    "HoradamError",
    "HoradamParams",
    "HoradamSequence",
    "IndexGuardExceeded",
    "ParseError",
    "PreconditionUnmet",
    "SequenceTriple",
    "UnknownIdentity",
    "UnknownPreset",
    "format_scalar",
    "parse_scalar",
    "preset",
    "term",
    "term_fast",
]
