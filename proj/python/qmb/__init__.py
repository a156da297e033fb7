"""Quasi-metric spaces, bornologies, and seeded verification suites."""

try:
    from ._qmb import (
        ConfigError,
        QmbError,
        Space,
        closure_info,
        compose,
        construct_chi,
        list_zoo,
        oracle_cross_check,
        random_digraph_text,
        run_suite,
        suite_ids,
        zoo_ids,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _qmb import (
        ConfigError,
        QmbError,
        Space,
        closure_info,
        compose,
        construct_chi,
        list_zoo,
        oracle_cross_check,
        random_digraph_text,
        run_suite,
        suite_ids,
        zoo_ids,
    )


def verify(suite, target=None, **options):
    """Run a verification suite and return the report as a dict.

    Keyword options mirror the JSON config fields: second, samples, seed,
    tol, grids, delta, char, base, bornology, budgets.
    """
    config = {"suite": suite, **options}
    if target is not None:
        config["target"] = target
    return run_suite(config)


__all__ = [
    "ConfigError",
    "QmbError",
    "Space",
    "closure_info",
    "compose",
    "construct_chi",
    "list_zoo",
    "oracle_cross_check",
    "random_digraph_text",
    "run_suite",
    "suite_ids",
    "verify",
    "zoo_ids",
]
