"""Random linear network coding laboratory.

Decide which rate vectors a multi-source multi-sink acyclic network can
carry under random linear coding, and verify the prediction empirically:
seeded Monte Carlo on one side, exact enumeration of every coefficient
tuple on the other.
"""
from .achieve import RegionReport, SinkCondition, check_rate, enumerate_region
from .coding import (
    CodingAssignment,
    code_with_coefficients,
    coefficient_slots,
    random_code,
    recheck,
)
from .decode import SinkView, all_sinks_decodable, decodable, decoding_matrix, sink_view
from .errors import GuardExceeded
from .experiment import (
    ExactProbability,
    SweepTable,
    TrialReport,
    brute_force,
    existence_search,
    field_sweep,
    monte_carlo,
    trial_rng,
)
from .gf import Field, FieldElement, FieldError, binary_field, parse_field, prime_field
from .linalg import Vec, in_span, project, rank, solve_for_targets, unit
from .maxflow import FlowResult, verify_flow
from .maxflow import maxflow as max_flow
from .network import (
    AugmentedNetwork,
    Edge,
    NetworkError,
    NetworkFormatError,
    NetworkSpec,
    augment,
    load_network,
    make_network,
    parse_rate,
    save_network,
    topo_edge_order,
    validate,
)

__version__ = "0.1.0"
