"""Analysis of entanglement-breaking and entanglement-annihilating channels.

The package provides dense tensor linear algebra, the states and channels of
the local-depolarizing-noise case study, PPT-based separability verdicts with
closed-form spectra where covariance permits them, randomized falsification
for general channels, and bisection-based threshold location.
"""

from .linalg import (
    hermitian_eigenvalues,
    kron,
    kron_all,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    permute_factors,
)
from .states import (
    DensityOperator,
    PureState,
    SchmidtDecomposition,
    classically_correlated_pair,
    ghz,
    haar_pure,
    max_entangled,
    max_entangled_projector,
    random_density,
    schmidt,
    schmidt_pure,
    tensor_pure,
    w_state,
    werner,
)
from .channels import (
    Channel,
    MeasurePrepare,
    apply,
    channel_from_choi,
    channel_from_spec,
    choi_from_kraus,
    choi_of,
    compose,
    constant_channel,
    depolarizing,
    identity_channel,
    kraus_from_choi,
    load_channel_spec,
    measure_prepare_channel,
    random_channel,
    tensor,
    tensor_power,
)
from .criteria import (
    FalsifierReport,
    Partition,
    SeparabilityVerdict,
    ThresholdResult,
    Verdict,
    bipartitions,
    bisect_threshold,
    ea_falsify,
    ea_mixing_channel,
    embedded_max_entangled,
    ghz_three_lea_min_eig,
    is_eb,
    k_lea_falsify,
    negativity,
    ppt_min_eigenvalue,
    ppt_verdict,
    separable_mixing_threshold,
    two_lea_min_eig_depolarizing,
    two_lea_pt_eigenvalues,
    two_lea_verdict_depolarizing,
    two_lea_verdict_heuristic,
)

__version__ = "0.1.0"

__all__ = [
    "Channel",
    "DensityOperator",
    "FalsifierReport",
    "MeasurePrepare",
    "Partition",
    "PureState",
    "SchmidtDecomposition",
    "SeparabilityVerdict",
    "ThresholdResult",
    "Verdict",
    "apply",
    "bipartitions",
    "bisect_threshold",
    "channel_from_choi",
    "channel_from_spec",
    "choi_from_kraus",
    "choi_of",
    "classically_correlated_pair",
    "compose",
    "constant_channel",
    "depolarizing",
    "ea_falsify",
    "ea_mixing_channel",
    "embedded_max_entangled",
    "ghz",
    "ghz_three_lea_min_eig",
    "haar_pure",
    "hermitian_eigenvalues",
    "identity_channel",
    "is_eb",
    "k_lea_falsify",
    "kraus_from_choi",
    "kron",
    "kron_all",
    "load_channel_spec",
    "max_entangled",
    "max_entangled_projector",
    "measure_prepare_channel",
    "min_eigenvalue",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "permute_factors",
    "ppt_min_eigenvalue",
    "ppt_verdict",
    "random_channel",
    "random_density",
    "schmidt",
    "schmidt_pure",
    "separable_mixing_threshold",
    "tensor",
    "tensor_power",
    "tensor_pure",
    "two_lea_min_eig_depolarizing",
    "two_lea_pt_eigenvalues",
    "two_lea_verdict_depolarizing",
    "two_lea_verdict_heuristic",
    "w_state",
    "werner",
]
