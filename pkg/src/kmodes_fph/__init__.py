"""k-modes clustering of categorical data with farthest-point initialization."""

__version__ = "0.1.0"

from .core import RunResult, assign_step, kmodes, objective, update_modes
from .dataset import (
    Dataset,
    DatasetSchema,
    FrequencyTable,
    cluster_frequency_table,
    encode_records,
    global_frequency_table,
    load_dataset,
)
from .evaluation import AccuracyReport, clustering_accuracy
from .initialization import (
    Seeding,
    farthest_point_chain,
    init_bfph,
    init_nfph,
    init_random,
    initialize,
    partition_radius,
    point_scores,
)
from .metric import simple_matching

__all__ = [
    "AccuracyReport",
    "Dataset",
    "DatasetSchema",
    "FrequencyTable",
    "RunResult",
    "Seeding",
    "assign_step",
    "cluster_frequency_table",
    "clustering_accuracy",
    "encode_records",
    "farthest_point_chain",
    "global_frequency_table",
    "init_bfph",
    "init_nfph",
    "init_random",
    "initialize",
    "kmodes",
    "load_dataset",
    "objective",
    "partition_radius",
    "point_scores",
    "simple_matching",
    "update_modes",
]
