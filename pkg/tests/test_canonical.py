from __future__ import annotations

import random

from theta_spectra import families as fam
from theta_spectra.canonical import automorphisms, canonical_form, certificate
from theta_spectra.graphs import SimpleGraph


def shuffled(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    return g.relabel(perm)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + inner + [(i, i + 5) for i in range(5)])


def test_relabelings_share_certificate(rng):
    th = fam.theta_hat(2, 2, 2)
    assert certificate(shuffled(th, rng)) == certificate(shuffled(th, rng)) == certificate(th)
    assert certificate(fam.theta_hat(1, 2, 2)) != certificate(th)


def test_random_graph_permutation_closure(rng):
    n = 10
    g = SimpleGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4))
    certs = {certificate(shuffled(g, rng)) for _ in range(1000)}
    assert len(certs) == 1


def test_regular_and_symmetric_graphs(rng):
    p = petersen()
    assert len({certificate(shuffled(p, rng)) for _ in range(50)}) == 1
    assert len(automorphisms(p)) == 120
    assert len(automorphisms(fam.theta_hat(2, 2, 2))) == 12
    cyc = SimpleGraph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)])
    assert len(automorphisms(cyc)) == 16
    assert automorphisms(cyc)[0] == tuple(range(8))


def test_distinguishes_non_isomorphic():
    c6 = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert certificate(c6) != certificate(two_triangles)


def test_certificate_round_trips_to_isomorph(rng):
    g = SimpleGraph(9, frozenset((i, j) for i in range(9) for j in range(i + 1, 9) if rng.random() < 0.5))
    cf = canonical_form(g)
    h = SimpleGraph.from_graph6(cf.certificate)
    assert certificate(h) == cf.certificate
    assert h == g.relabel(cf.labelling)
    assert list(cf.canonical_edge_list) == sorted(cf.canonical_edge_list)


def test_empty_and_tiny():
    assert certificate(SimpleGraph(0)) == b"?"
    assert certificate(SimpleGraph(1)) == b"@"
