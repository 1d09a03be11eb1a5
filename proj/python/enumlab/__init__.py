"""Python bindings for the enumlab core.

Reports come back as plain dicts with the same fields as the command-line
JSON. Naturals are Python ints in both directions.
"""

from ._core import (  # noqa: F401
    DEFAULT_BRANCH_CAP,
    DEFAULT_FUEL,
    EnumlabError,
    Listing,
    Program,
    assemble,
    certify,
    check_bound,
    cli,
    coorder,
    corpus_kind,
    corpus_listing,
    corpus_names,
    corpus_program,
    corpus_source,
    equivalence,
    fit,
    increasing_listing,
    lift_certificate,
    more_rapid,
    run_det,
    run_nondet,
    sat_brute_force,
    sat_decode,
    sat_encode,
    sat_guess_program,
    strictly_more_rapid,
    turing_consistency,
    verify_certificate,
    verify_reduction,
)

__version__ = "0.1.0"
