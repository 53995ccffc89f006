"""Exact computations in the 3-Lie algebra A_omega^delta and its modules."""

from ._core import (
    Error,
    NotAModule,
    ParseError,
    bracket,
    bracket_det,
    check_fundamental,
    check_module_t,
    counterexample_phi,
    decompose,
    orbit,
    parse_elem,
    parse_scalar,
    run_cli,
    scalar_divides,
)

__all__ = [
    "Error",
    "NotAModule",
    "ParseError",
    "bracket",
    "bracket_det",
    "check_fundamental",
    "check_module_t",
    "counterexample_phi",
    "decompose",
    "orbit",
    "parse_elem",
    "parse_scalar",
    "run_cli",
    "scalar_divides",
]
