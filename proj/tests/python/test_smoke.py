import math
import os
import subprocess

import networkx as nx
import pytest

import dissrho


def test_family_and_spectral_radius():
    g = dissrho.Graph.family("S(0,3)")
    assert g.order == 7
    r = dissrho.spectral_radius(g)
    assert abs(r["rho"] - 2.0) <= 1e-9
    assert all(x > 0 for x in r["perron"])


def test_graph6_round_trip_matches_networkx():
    g = dissrho.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    text = g.graph6()
    h = nx.from_graph6_bytes(text.encode())
    assert nx.is_isomorphic(h, nx.cycle_graph(5))
    assert nx.to_graph6_bytes(nx.cycle_graph(5), header=False).strip().decode() == text
    assert dissrho.Graph.from_graph6(text) == g


def test_dissociation():
    value, witness = dissrho.diss(dissrho.Graph.family("H(12)"))
    assert value == 10
    assert len(witness) == 10
    assert dissrho.diss(dissrho.Graph.family("C(7)"), engine="brute")[0] == 4


def test_enumeration_counts_match_networkx_atlas():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6 and nx.is_connected(g)]
    assert len(dissrho.enumerate(6)) == len(atlas) == 112
    assert len(dissrho.enumerate(7, mode="trees")) == 11
    assert dissrho.canonical_form(dissrho.Graph.family("C(5)")) in dissrho.enumerate(5, diss=3)


def test_search_report():
    rep = dissrho.min_rho_search(9, 7)
    assert rep["class_size"] > 0
    assert len(rep["minimizers"]) == 1
    assert "E8T" in rep["minimizers"][0]["matches"]
    assert math.isclose(rep["min_rho"], 2.0, abs_tol=1e-9)


def test_errors():
    with pytest.raises(ValueError):
        dissrho.Graph.from_graph6("D?")
    with pytest.raises(ValueError):
        dissrho.spectral_radius(dissrho.Graph(3))
    with pytest.raises(ValueError):
        dissrho.Graph(3, [(0, 0)])


def test_cli_in_process():
    code, out, _ = dissrho.run_cli(["diss", "H(12)"])
    assert code == 0
    assert out.startswith("10 ")
    code, _, err = dissrho.run_cli(["nonsense"])
    assert code == 2


@pytest.mark.skipif("DISSRHO_CLI" not in os.environ, reason="command-line binary not given")
def test_cli_binary_pipeline():
    exe = os.environ["DISSRHO_CLI"]
    g6 = subprocess.run([exe, "family", "S(0,3)"], check=True, capture_output=True, text=True).stdout
    out = subprocess.run([exe, "rho", "-"], input=g6, check=True, capture_output=True, text=True).stdout
    assert abs(float(out.split()[0]) - 2.0) <= 1e-9
