from .export import bench_frame as bench_frame
from .export import coordinates_frame as coordinates_frame
from .export import query_line as query_line
from .export import write_bench as write_bench
from .export import write_chain as write_chain
from .export import write_coordinates as write_coordinates
from .export import write_factor_map as write_factor_map
from .export import write_histogram as write_histogram
from .export import write_partitions as write_partitions
from .export import write_text as write_text
from .loader import load_cloud as load_cloud
from .loader import load_coordinates as load_coordinates
from .loader import load_matrix as load_matrix
from .render import place_markers as place_markers
from .render import render as render
from .render import render_svg as render_svg
from .render import render_text as render_text
