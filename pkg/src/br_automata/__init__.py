"""Best-response games on regular graphs viewed as cellular automata."""

from .core import (
    PayoffMatrix,
    RegularGraph,
    UpdateRule,
    best_response,
    canonical_profiles,
    induced_rule,
    step,
    total_payoff,
)
from .errors import (
    BRError,
    CensusTooLarge,
    DegenerateError,
    DimensionError,
    InfeasibleError,
    PatternError,
    SingularError,
    TieError,
)
from .geometry import (
    hulls_intersect,
    induced_by_game,
    is_realizable,
    matrix_from_rays,
    nash_point,
    partition_of,
    point_of,
    synthesize_matrix,
)
from .circuits import (
    build_pair_graph,
    enumerate_fundamental_pairs,
    good_colouring,
    has_alternating_cycle,
    is_unacceptable_pair,
)
from .enumeration import canonical_form, census, classify_rule, division_classes
from .simulator import random_config, run, wolfram_numbers
from .plot import Palette, render_spacetime

__version__ = "0.1.0"
