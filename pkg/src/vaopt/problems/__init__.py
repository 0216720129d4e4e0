"""Applied problems: economic dispatch, machine scheduling, MST, hub location, clustering."""

from .clustering import ClusterInstance, VAOClustering, clustering_objective, iris_instance, kmeans_restarts, load_iris
from .ed import EdInstance, ed_objective, load_ed, reference_ed_instance, save_ed
from .hla import HlaInstance, best_random_placement, hla_objective, random_hla_instance, warm_start_oracle
from .mst import MstInstance, mst_decode_and_cost, prim_mst, random_mst_instance
from .pms import PmsInstance, brute_force_pms, load_pms, lpt_schedule, reference_pms_instance, pms_cmax, pms_decode, save_pms

__all__ = [
    "ClusterInstance",
    "EdInstance",
    "HlaInstance",
    "MstInstance",
    "PmsInstance",
    "VAOClustering",
    "best_random_placement",
    "brute_force_pms",
    "clustering_objective",
    "ed_objective",
    "hla_objective",
    "iris_instance",
    "kmeans_restarts",
    "load_ed",
    "load_iris",
    "load_pms",
    "lpt_schedule",
    "mst_decode_and_cost",
    "reference_ed_instance",
    "reference_pms_instance",
    "pms_cmax",
    "pms_decode",
    "prim_mst",
    "random_hla_instance",
    "random_mst_instance",
    "save_ed",
    "save_pms",
    "warm_start_oracle",
]
