"""Complete valuations on finite distributive lattices and realizers of 2-dimensional posets."""
from .birkhoff import (
    Antichain,
    DownsetLattice,
    antichain_of,
    delta,
    downset_lattice,
    downset_of_antichain,
    join,
    meet,
)
from .errors import LatvalError
from .poset import (
    LinearExtension,
    Poset,
    Realizer,
    antichain,
    build_poset,
    chain,
    complementary_poset,
    dual_poset,
    incomparable_pairs,
    is_linear_extension,
    linear_extension,
    linear_extensions,
    make_realizer,
    standard_example,
)
from .realizer import (
    chain_count_weights,
    complete_valuation,
    extract_realizer,
    find_realizer,
    is_realizer,
    iter_realizers,
    round_trip_check,
    successor,
)
from .valuation import (
    AxiomReport,
    SegmentVerdict,
    Valuation,
    WeightFunction,
    check_valuation_axioms,
    dual_valuation,
    is_bijective,
    is_complete,
    join_set,
    lower_complete,
    meet_set,
    omega_encode,
    upper_complete,
    valuation_from_weights,
    weights_from_valuation,
)

__version__ = "0.1.0"
