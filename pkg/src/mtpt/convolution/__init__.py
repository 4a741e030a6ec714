from .extint import FINITE_BOUND, NEG_INF, POS_INF, as_level_vector, format_entry, is_finite, sat_sub
from .mms import (
    DEFAULT_BACKEND,
    MmsBackend,
    UnknownBackendError,
    backend_names,
    get_backend,
    mms_convolve,
    mms_definitional,
    mms_windowed,
    register_backend,
)
from .sumsets import MemberSet, SumSet, or_convolve, prefix, subset_sums, suffix, sumset

__all__ = [
    "DEFAULT_BACKEND",
    "FINITE_BOUND",
    "MemberSet",
    "MmsBackend",
    "NEG_INF",
    "POS_INF",
    "SumSet",
    "UnknownBackendError",
    "as_level_vector",
    "backend_names",
    "format_entry",
    "get_backend",
    "is_finite",
    "mms_convolve",
    "mms_definitional",
    "mms_windowed",
    "or_convolve",
    "prefix",
    "register_backend",
    "sat_sub",
    "subset_sums",
    "suffix",
    "sumset",
]
