from .env import Env as Env
from .bench import bench_uniform as bench_uniform
from .correspondence import build_correspondence_map as build_correspondence_map
from .correspondence import project_supplementary as project_supplementary
from .correspondence import total_inertia_oracle as total_inertia_oracle
from .grid_search import build_index as build_index
from .grid_search import nearest as nearest
from .grid_search import nearest_bruteforce as nearest_bruteforce
from .madic_chain import baire_bucket as baire_bucket
from .madic_chain import baire_distance as baire_distance
from .madic_chain import build_chain as build_chain
from .madic_chain import coarsen_axis as coarsen_axis
from .madic_chain import partition_at as partition_at
from .pipeline import PipelineRunner as PipelineRunner
from .pipeline import run_pipeline as run_pipeline
from .pixel_grid import assign_cell as assign_cell
from .pixel_grid import build_histogram as build_histogram
from .pixel_grid import overlap_report as overlap_report
from .pixel_grid import rescale_unit as rescale_unit
from .util import TimeParser as TimeParser
