"""Edge-matched tiling engine: periodic squares, Penrose patches, fractal trees."""

from ._tiling import (
    Patch,
    TileSet,
    TileSpecError,
    TilingError,
    builtin_names,
    builtin_tileset,
    count_row_arrangements,
    detect_collisions,
    grow,
    half_unit_counts,
    legal_vertex_star_keys,
    max_safe_scale,
    parse_tileset,
    patch_from_text,
    penrose,
    stats,
    tessellate,
    tile_ratio,
    to_svg,
    validate,
    vertex_star_keys,
)

__all__ = [
    "Patch",
    "TileSet",
    "TileSpecError",
    "TilingError",
    "builtin_names",
    "builtin_tileset",
    "count_row_arrangements",
    "detect_collisions",
    "grow",
    "half_unit_counts",
    "legal_vertex_star_keys",
    "max_safe_scale",
    "parse_tileset",
    "patch_from_text",
    "penrose",
    "stats",
    "tessellate",
    "tile_ratio",
    "to_svg",
    "validate",
    "vertex_star_keys",
]
