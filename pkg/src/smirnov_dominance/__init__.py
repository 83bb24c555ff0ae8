"""Exact upper-tailed Smirnov two-sample test as a family of lattice-path
critical regions, with counting and enumeration of its dominance refinements."""

from .counting import (
    binomial,
    count_dominated,
    count_dominating,
    dominance_level,
    kreweras_count,
    level_table,
    natural_level_count,
    ordered_bell,
    refinement_count,
    saturated_level_count,
    saturated_refinement_count,
    tail_probability,
)
from .diophantine import LineSolutions, Spectrum, alpha, solve_line, spectrum
from .errors import *  # noqa: F401,F403
from .lattice import (
    LatticePath,
    ProfileFamily,
    SampleData,
    StepSequence,
    distinct_profiles,
    dominates,
    gnedenko_path,
    path_from_tuple,
    profile,
    statistic,
    steps_to_tuple,
    tuple_to_steps,
)
from .refinement import (
    GapCell,
    RefinementChain,
    enumerate_gap_refinements,
    enumerate_refinements,
    flip_cells,
    gap_cells,
    is_saturated,
    verify_chain,
)

__version__ = "0.1.0"
