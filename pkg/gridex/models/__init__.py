from .axis_binning import AxisBinning as AxisBinning
from .bench_row import BenchRow as BenchRow
from .bench_row import Distribution as Distribution
from .coarsening_chain import CoarseningChain as CoarseningChain
from .coarsening_chain import PointCode as PointCode
from .data_matrix import DataMatrix as DataMatrix
from .factor_map import FactorMap as FactorMap
from .grid_histogram import GridHistogram as GridHistogram
from .merge_rule import MergeRule as MergeRule
from .nn_result import NNResult as NNResult
from .overlap_report import DuplicateGroup as DuplicateGroup
from .overlap_report import OverlapReport as OverlapReport
from .partition_labels import PartitionLabels as PartitionLabels
from .pipeline_config import CloudSource as CloudSource
from .pipeline_config import PipelineConfig as PipelineConfig
from .point_id import PointId as PointId
from .profile_kind import ProfileKind as ProfileKind
from .render_spec import CellAnnotation as CellAnnotation
from .render_spec import Marker as Marker
from .render_spec import RenderMode as RenderMode
from .render_spec import RenderSpec as RenderSpec
from .run_status import RunStatus as RunStatus
from .stage_run import StageRun as StageRun
from .supplementary_point import SupplementaryPoint as SupplementaryPoint
from .supplementary_profile import SupplementaryProfile as SupplementaryProfile
from .unit_cloud import UnitCloud as UnitCloud
