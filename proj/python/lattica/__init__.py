"""Conceptual views on topic models: formal contexts, lattices, cores, rules and motifs."""

from ._lattica import (
    CeilingError,
    Context,
    concepts,
    count_concepts,
    draw_geometric_svg,
    draw_lattice_svg,
    geometric_structure,
    iceberg,
    is_motif,
    lattice,
    maximal_motifs,
    motif_families,
    pq_core,
    rules,
    support,
    threshold_scale,
    topn_scale,
)

__all__ = [
    "CeilingError",
    "Context",
    "concepts",
    "count_concepts",
    "draw_geometric_svg",
    "draw_lattice_svg",
    "geometric_structure",
    "iceberg",
    "is_motif",
    "lattice",
    "maximal_motifs",
    "motif_families",
    "pq_core",
    "rules",
    "support",
    "threshold_scale",
    "topn_scale",
]
