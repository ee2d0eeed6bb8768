"""State complexity of reversal and star combined with catenation."""

from ._scops import (
    BudgetError,
    Dfa,
    DocumentError,
    InputError,
    ShapeError,
    combined,
    distinguishing_word,
    empty,
    enumerate_accepted,
    equivalent,
    evaluate,
    exhaustive_search,
    from_json,
    minimize,
    minimize_brzozowski,
    oracle_pipeline,
    oracle_sc,
    random_check,
    sc_revcat,
    sc_starcat,
    sc_starcat_special,
    sigma_star,
    ub_revcat,
    ub_revcat_n1,
    ub_starcat_general,
    verify_construction,
    verify_witness,
    witness,
    witness_families,
)

__all__ = [
    "BudgetError",
    "Dfa",
    "DocumentError",
    "InputError",
    "ShapeError",
    "combined",
    "distinguishing_word",
    "empty",
    "enumerate_accepted",
    "equivalent",
    "evaluate",
    "exhaustive_search",
    "from_json",
    "minimize",
    "minimize_brzozowski",
    "oracle_pipeline",
    "oracle_sc",
    "random_check",
    "sc_revcat",
    "sc_starcat",
    "sc_starcat_special",
    "sigma_star",
    "ub_revcat",
    "ub_revcat_n1",
    "ub_starcat_general",
    "verify_construction",
    "verify_witness",
    "witness",
    "witness_families",
]
