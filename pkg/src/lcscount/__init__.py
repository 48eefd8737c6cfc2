"""lcscount: exact counting of longest common subsequences and embeddings."""

from .core import (
    CountKind,
    LcsSummary,
    RollingState,
    count_distinct_full,
    count_embeddings_full,
    count_linear_space,
    lcs_length,
    step_cell,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CountKind",
    "LcsSummary",
    "RollingState",
    "count_distinct_full",
    "count_embeddings_full",
    "count_linear_space",
    "lcs_length",
    "step_cell",
    "summarize",
    "__version__",
]
