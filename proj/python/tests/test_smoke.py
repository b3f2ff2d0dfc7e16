"""Smoke tests for the python bindings (the C++ suites carry the real load)."""
import itertools
import sys, os
sys.path.insert(0, os.environ.get("WHPP_PY_BUILD_DIR", ""))

import pytest

import _whpp as whpp


def test_from_bases_and_validation():
    m = whpp.from_bases(3, [[0, 1], [0, 2], [1, 2]])
    assert m.rank == 2
    assert len(m) == 3
    assert m.is_basis([0, 1])
    assert not m.is_basis([0])
    with pytest.raises(whpp.WhppError):
        whpp.from_bases(4, [[0, 1], [2, 3]])


def test_uniform_and_duality():
    u24 = whpp.uniform(2, 4)
    assert whpp.dual(u24) == u24
    assert whpp.dim_V(whpp.uniform(3, 7)) == 35


def test_catalog_roundtrip():
    names = whpp.catalog_names()
    assert len(names) == 28
    f7 = whpp.catalog("F7")
    assert f7.n == 7 and len(f7) == 28
    n, bases, dimv = whpp.catalog_expected("F7")
    assert (n, bases, dimv) == (7, 28, 7)
    assert whpp.dim_V(f7) == 7


def test_catalog_spot_rows():
    for name in ("M(K4)", "T8", "PG(2,3)"):
        m = whpp.catalog(name)
        n, bases, dimv = whpp.catalog_expected(name)
        assert m.n == n and len(m) == bases
        assert whpp.dim_V(m) == dimv


def test_minor_and_relax():
    u24 = whpp.uniform(2, 4)
    small, labels = whpp.minor(u24, [3], [])
    assert small == whpp.uniform(2, 3)
    assert labels == [0, 1, 2]
    f7 = whpp.catalog("F7")
    lines = whpp.circuit_hyperplanes(f7)
    assert len(lines) == 7
    relaxed = whpp.relax(f7, lines[0])
    assert len(relaxed) == 29


def test_tutte_invariants():
    free, torsion = whpp.tutte_invariants(whpp.catalog("M(K4)"))
    assert free == 6
    assert torsion == [2]


def test_verdicts():
    v = whpp.whpp_verdict(whpp.catalog("F7"))
    assert v["whpp_status"] == "NOT_WHPP"
    assert v["dim_V"] == v["dim_W"] == 7
    assert v["is_binary"] and not v["is_regular"]

    g = whpp.whpp_verdict(whpp.graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    assert g["whpp_status"] == "WHPP"

    nf = whpp.whpp_verdict(whpp.catalog("F7^-"))
    assert nf["whpp_status"] == "UNDETERMINED"
    assert nf["inner_free_rank"] == 1


def test_quadrangles():
    assert whpp.quadrangle_count(whpp.uniform(3, 7)) == 0
    k4 = whpp.catalog("M(K4)")
    dump = whpp.dump_quadrangles(k4)
    assert dump.startswith("S={")
    assert whpp.quadrangle_count(k4) == dump.count("\n")


def test_isomorphism_and_components():
    tri = whpp.graphic([(0, 1), (1, 2), (2, 0)])
    assert whpp.is_isomorphic(whpp.uniform(2, 3), tri) is not None
    blocks = whpp.connected_components(whpp.direct_sum(whpp.uniform(1, 1), whpp.uniform(1, 1)))
    assert blocks == [[0], [1]]
