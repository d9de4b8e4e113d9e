"""Crystallographic string Coxeter groups over GF(p).

Thin Python facade over the ``_polyfield`` extension: reduce a string
Coxeter diagram mod an odd prime, classify the image among orthogonal
groups, test the string C-group (abstract regular polytope) property,
and reproduce the verification suites of the command-line tool.
"""

try:
    from ._polyfield import (  # type: ignore[attr-defined]
        DEFAULT_ENUM_CAP,
        analyze,
        classify,
        duality_check_H,
        group_order,
        is_string_cgroup,
        orthogonal_order,
        petrie,
        report_passes,
        run_suite,
        suite_names,
        summarize,
        toroid_type,
    )
except ImportError:  # extension built out-of-tree (e.g. plain CMake build)
    from _polyfield import (  # type: ignore[no-redef]
        DEFAULT_ENUM_CAP,
        analyze,
        classify,
        duality_check_H,
        group_order,
        is_string_cgroup,
        orthogonal_order,
        petrie,
        report_passes,
        run_suite,
        suite_names,
        summarize,
        toroid_type,
    )

__all__ = [
    "DEFAULT_ENUM_CAP",
    "analyze",
    "classify",
    "duality_check_H",
    "group_order",
    "is_string_cgroup",
    "orthogonal_order",
    "petrie",
    "report_passes",
    "run_suite",
    "suite_names",
    "summarize",
    "toroid_type",
]

__version__ = "1.0.0"
