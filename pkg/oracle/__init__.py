from oracle.search import max_1d, max_2d, numeric_poly_norm, golden_section_maximize
from oracle.corpus import random_polys, unit_polys, arc_points

__all__ = [
    'max_1d', 'max_2d', 'numeric_poly_norm', 'golden_section_maximize',
    'random_polys', 'unit_polys', 'arc_points',
]
