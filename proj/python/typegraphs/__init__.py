"""Order types of set pairs, the graphs they induce, and their colourings.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.  Types are digit strings over {1,2,3}, sets and tuples are
lists of ints, and validation problems raise ValueError.
"""

from ._core import (
    ChromaticResult,
    Coloring,
    Graph,
    block_decompose,
    build_gb,
    build_typegraph,
    ceil_log2,
    color_gb,
    color_typegraph,
    dual,
    dyadic_split,
    eta,
    exact_chromatic,
    factorize,
    gb_palette,
    greedy_clique,
    greedy_coloring,
    hom_project,
    hom_upper,
    is_irreducible,
    order_type_of,
    shift_pair_coloring,
    sigma,
    verify_hom_lower,
    verify_hom_reducible,
    verify_hom_upper,
    verify_proper,
    width,
)

__all__ = [
    "ChromaticResult",
    "Coloring",
    "Graph",
    "block_decompose",
    "build_gb",
    "build_typegraph",
    "ceil_log2",
    "color_gb",
    "color_typegraph",
    "dual",
    "dyadic_split",
    "eta",
    "exact_chromatic",
    "factorize",
    "gb_palette",
    "greedy_clique",
    "greedy_coloring",
    "hom_project",
    "hom_upper",
    "is_irreducible",
    "order_type_of",
    "shift_pair_coloring",
    "sigma",
    "verify_hom_lower",
    "verify_hom_reducible",
    "verify_hom_upper",
    "verify_proper",
    "width",
]
