"""Exact Hall-Littlewood computations.

Polynomials in t are dicts {exponent: coefficient}; expansions map partition
tuples to such dicts.
"""

from ._hlkit import (
    NonDominantWeight,
    NotAPartition,
    ParseError,
    PreconditionViolation,
    add_one,
    aleph,
    aleph_column_rule,
    charge,
    defq_note_holds,
    factor_check,
    plane_partition_qprime,
    qprime,
    qprime_eval,
    qprime_indexed,
    qprime_text,
    sigmaxy_check,
    sub_one,
    tableaux,
    theta_scalar_check,
    warnaar_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
