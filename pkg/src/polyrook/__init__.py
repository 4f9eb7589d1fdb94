"""Polyomino ideals: Hilbert series, switching rooks and parallelogram Gorensteinness."""

from .enumerate import count_fixed, enumerate_fixed, enumerate_simple
from .errors import (
    ChainExplosion,
    Disconnected,
    Empty,
    EndpointMismatch,
    Incomparable,
    InexactDivision,
    InvalidPair,
    InvalidPolyomino,
    InvalidWord,
    IsRectangle,
    MethodsDisagree,
    NegativeCoefficient,
    NonBinomialEncountered,
    NotParallelogram,
    PathsCross,
    PolyrookError,
    RankOutOfRange,
    SwitchBrokeInvariant,
)
from .grid import (
    Cell,
    Interval,
    Polyomino,
    canonical_form,
    convexity,
    d4_images,
    is_simple,
    load_polyomino,
    maximal_cell_intervals,
    maximal_edge_intervals,
    normalize,
    parse_polyomino,
    to_grid_text,
    to_json,
    vertices,
)
from .groebner import buchberger, generators, h_polynomial, hilbert_numerator, krull_dim, regularity
from .lattice import (
    el_labelling,
    h_via_cell_chains,
    h_via_descents,
    is_pure,
    join_irreducibles,
    lattice_of,
    maximal_chains,
    uppermost_chain,
)
from .motzkin import MotzkinWord, Step, decode, encode, gorenstein_blocks
from .parallelogram import (
    PathPair,
    derived_sequence,
    detect,
    from_paths,
    has_s_property,
    is_gorenstein,
    is_parallelogram,
    is_shortenable,
    is_well_shortenable,
    max_rectangle,
    maximal_rectangles,
    min_rectangle,
    single_squares,
)
from .polynomial import IntPolynomial
from .rooks import equivalence_classes, r_tilde_polynomial, rook_number, rook_polynomial, switches
from .verify import Report, classify_gorenstein, crosscheck_parallelogram, verify_conjecture

__version__ = "0.1.0"
