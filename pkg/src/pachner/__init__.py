"""Exact Delaunay dynamics, Pachner-move words and the triangulation groups."""

from __future__ import annotations

from .delaunay import Configuration, Triangulation, delaunay, is_delaunay, lower_hull
from .dynamics import PachnerEvent, Trajectory, diff_move, trace, trace_events
from .exactgeom import Sign, affine_rank, co_spherical, in_sphere, orientation, point, relint_contains_origin
from .gale import (
    StandardGaleDiagram,
    count_standard_diagrams,
    enumerate_standard_diagrams,
    gale_diagram,
    gale_transform,
    left_right_sets,
    relation_word,
)
from .groups import Chain, abelianization_rank_z2, boundary, generators, is_nontrivial_ab_z2, presentation, psi
from .words import Letter, free_reduce, letter

__version__ = "0.1.0"
