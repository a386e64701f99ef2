"""Characters, zonal spherical functions and generalized characters of Z_k wr S_n."""
from .exactnum import Cyclotomic, Rational, cyc_conjugate, cyc_make, rat_arith
from .gelfand import (
    ClassFunction,
    gen_char_corollary,
    gen_char_def,
    gen_char_mn,
    gen_char_table,
    induced_character_value,
    inner_product,
    zonal,
)
from .irrchar import (
    CharacterTable,
    char_bipartite,
    char_wreath,
    character_table,
    restriction_decomposition,
)
from .shapes import (
    Box,
    Marked,
    SkewShape,
    border_strip_height,
    broken_strip_analysis,
    contains,
    content,
    covers,
    enumerate_k_partite,
    exterior_corners,
    gather,
    parse_shape,
    render_shape,
    z_value,
)
from .wreath import (
    WreathElement,
    centralizer_order,
    cycle_sum,
    enumerate_group,
    find_K_conjugator,
    inverse,
    k_class_size,
    marked_type_of,
    multiply,
    type_of,
    verify_symmetric_gelfand,
)

__version__ = "0.1.0"
