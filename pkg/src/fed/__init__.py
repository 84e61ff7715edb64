"""Matching-driven rotation states with certified approximation ratios
for the highest-energy state of the EPR model on graphs."""

from fed.certificate import Certificate, OracleBlock, certify
from fed.graph import (
    Edge,
    EdgeDegreeProfile,
    Graph,
    GraphError,
    edge_degree_profile,
    graph_hash,
    integerize_weights,
    load_graph,
    load_graph_file,
    to_edge_list,
)
from fed.magic import (
    EdgeEnergy,
    EnergyReport,
    MagicStateError,
    ThetaAssignment,
    assign_thetas,
    edge_energy,
    expect_pq,
    expect_qp,
    expect_zz,
    total_energy,
)
from fed.matching import (
    FractionalMatching,
    MatchingError,
    MatchingQuality,
    constrained_fm,
    hfm,
    merge_matching,
    mwfm,
    qhfm,
    quality,
)
from fed.oracle import (
    BoundCheck,
    OptimizeResult,
    OracleError,
    SpectrumResult,
    build_state,
    dense_hamiltonian,
    epr_lambda_max,
    optimize_thetas,
    pair_expectations,
    state_energy,
    verify_fm_bound,
)
from fed.ratio import (
    FULL_RANGE_KAPPA,
    FULL_RANGE_RATIO,
    GOLDEN,
    TWO_REGULAR_RATIO,
    RatioError,
    RatioSolution,
    edge_energy_floor,
    edge_ratio_floor,
    regular_table,
    solve_fraction_set,
    solve_full_range,
    solve_range,
    solve_regular,
)

__version__ = "0.1.0"
