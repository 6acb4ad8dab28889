"""RSK shapes, Schur-Weyl sampling and checks of their expectation bounds."""

from ._core import (
    ConfigError,
    bump_stream,
    distance,
    distance_rate_bound,
    distance_rate_check,
    excess_check,
    greene_invariant,
    iterated_shape,
    itw,
    lis,
    metric_names,
    mod_density,
    rsk,
    run_experiment,
    run_suite,
    sample_plancherel,
    sample_sw,
    sample_word,
    shape,
    standardize,
    suite_names,
    sw_distribution,
    viennot_json,
    viennot_text,
)

__version__ = "0.1.0"
