"""Decoding-equivalence geometry of discrete memoryless channels."""

from .channel import (
    Channel,
    Ranking,
    WeakOrder,
    WeakOrderMatrix,
    column_ranking,
    cone_dimension,
    decoding_equivalent,
    enumerate_weak_orders,
    fubini,
    is_stable,
    validate_channel,
    weak_order_column,
    weak_order_matrix,
)
from .metrics import (
    AgreementReport,
    global_decoding_distance,
    output_distribution,
    radial_agreement_probability,
    radial_decoding_distance,
)
from .perms import (
    AgreementCount,
    agreement_probability,
    compose,
    decoding_distance,
    f,
    inverse,
    kendall_tau,
    s_pair,
    s_single,
    transposition_delta,
)
