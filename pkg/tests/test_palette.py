from __future__ import annotations

import pytest

from tpclab.checker import PathFlavor, is_total_proper_connected
from tpclab.graph import enumerate_connected_graphs, make_cycle, make_path
from tpclab.palette import PaletteSearch, first_passing


def test_three_colors_suffice_on_a_path():
    g = make_path(4)
    result = first_passing(PaletteSearch(g, 3))
    assert result.witness is not None
    assert result.witness.colors_used() == {1, 2, 3}
    assert is_total_proper_connected(g, result.witness).connected


def test_two_colors_never_suffice_on_a_path():
    result = first_passing(PaletteSearch(make_path(3), 2))
    assert result.witness is None


SMALL = [g for n in range(1, 5) for g in enumerate_connected_graphs(n) if g.n + g.num_edges <= 8]


@pytest.mark.parametrize("flavor", list(PathFlavor))
@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.num_edges}d{max(map(len, g.adjacency))}")
def test_symmetry_and_pruning_do_not_change_the_verdict(g, flavor):
    for k in (1, 2, 3):
        plain = PaletteSearch(g, k, flavor, symmetry=False, prune=False).run()
        reduced = PaletteSearch(g, k, flavor).run()
        assert (plain.witness is None) == (reduced.witness is None)
        assert reduced.colorings_tried <= plain.colorings_tried


def test_edge_flavor_enumerates_edges_only():
    search = PaletteSearch(make_cycle(4), 1, PathFlavor.EDGE)
    assert search.count == 4
    assert search.run().witness is None
    witness = PaletteSearch(make_cycle(4), 2, PathFlavor.EDGE).run().witness
    assert witness is not None and witness.vertex_colors == ()


def test_prefix_blocks_cover_the_sequential_run():
    g = make_path(4)
    search = PaletteSearch(g, 3)
    sequential = search.run()
    blocks = [search.run(p) for p in search.prefixes(3)]
    first = next(b for b in blocks if b.witness is not None)
    assert first.witness == sequential.witness
    assert first_passing(search, workers=2, depth=3).witness == sequential.witness
