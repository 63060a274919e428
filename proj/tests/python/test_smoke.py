import json

import _arcdyck as ad


def test_partitions_and_weights():
    assert len(ad.enum_partitions((3, 3))) == 20
    assert ad.partition_to_weight([5, 4, 2, 2], (5, 5)) == "v^v^^vv^^v"
    assert ad.weight_to_partition("v^v^^vv^^v", (5, 5)) == [5, 4, 2, 2]


def test_cups_and_paths():
    cups, rays = ad.cup_diagram([5, 4, 2, 2], (5, 5))
    assert cups == [(1, 2), (3, 4), (6, 9), (7, 8)]
    assert rays == [5, 10]
    assert ad.dyck_rem([5, 4, 2, 2]) == [(-4, -4), (-2, -2), (1, 3), (2, 2)]


def test_kl_and_tilings():
    la = [11, 9, 8, 7, 6, 4, 3, 3, 2, 2]
    mu = [11, 11, 11, 11, 11, 11, 11, 8, 8, 8, 2, 2]
    assert ad.kl_polynomial(la, mu) == "q^8"
    assert ad.pair_degree(la, mu) == 8
    assert ad.dyck_tiling([2, 1], [1]) is None
    assert ad.sgn([1], [2]) == -1


def test_algebras():
    assert len(ad.k_basis((1, 1))) == 5
    assert len(ad.h_basis((1, 1))) == 5
    # D1 * D1 = 0 in the arc algebra
    d1 = ad.k_diagram_json((1, 1), [1], [], [1])
    prod = json.loads(ad.k_multiply(d1, d1))
    assert prod["terms"] == []
    # the peak through (2) equals minus the valley through the empty partition
    peak = json.loads(
        ad.gen_pair_product((2, 2), "up", [2], (-1, -1), "down", [2], (-1, -1))
    )
    assert len(peak["terms"]) == 1
    term = peak["terms"][0]
    assert term["re"] == "-1" and term["mid"] == []


def test_verification_and_modules():
    ok, checked, failures = ad.verify_relations((2, 2))
    assert ok and checked > 0 and not failures
    rep = json.loads(ad.verify_iso((1, 1)))
    assert rep["ok"]
    assert ad.socle_weight([2, 1], (3, 3)) == [3, 2, 1]
    assert "digraph" in ad.lattice_dot([2, 1], (3, 3))
    assert ad.graded_decomposition([2, 1], (3, 3))["2,1"] == "1"
