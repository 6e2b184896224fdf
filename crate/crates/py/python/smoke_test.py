"""Smoke test for the combgraph extension module.

Build and install first, e.g. `maturin develop` inside crates/py.
"""

import json

import combgraph as cg


def main():
    p4 = cg.Graph.from_graph6("Ch")
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert cg.Graph(3, [(0, 1), (1, 2), (0, 2)]).to_graph6() == "Bw"

    dec = cg.comb_decompose(p4)
    assert isinstance(dec, cg.CombDecomposition), dec
    assert cg.validate_comb(p4, dec) == []
    assert json.loads(dec.to_json())["matchings"] == [[[1, 0], [2, 3]]]

    chair = cg.Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    w = cg.comb_decompose(chair)
    assert isinstance(w, cg.Witness) and w.kind == "CHAIR", w
    assert cg.find_any_forbidden(chair.complement()).kind == "CO_CHAIR"
    assert not cg.is_comb(cg.Graph(5, [(i, (i + 1) % 5) for i in range(5)]))

    mislabel = cg.CombDecomposition.from_json(
        '{"n":1,"l":1,"k0":1,"A":[[],[0,3]],"X":[[1,2],[]],"M":[[]],"Y":[[],[]],"matchings":[[]]}'
    )
    assert "CB4" in {code for code, _, _ in cg.validate_comb(p4, mislabel)}

    params = {"n": 0, "l": 1, "k0": 1, "A": [0], "X": [3], "M": [3], "Y": [1, 0]}
    g, d = cg.generate_comb(json.dumps(params), seed=9)
    assert g.vertex_count == 7 and cg.validate_comb(g, d) == []

    assert [len(cg.enumerate_graphs(n, True)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert cg.census(4)[-1] == (4, 11, 9, 8, 9)
    assert cg.canonical_code(p4) != cg.canonical_code(cg.Graph(4, [(0, 1), (0, 2), (0, 3)]))

    try:
        cg.Graph(2, [(0, 0)])
    except ValueError as e:
        assert "self-loop" in str(e)
    else:
        raise AssertionError("self-loop accepted")

    print("combgraph smoke test passed")


if __name__ == "__main__":
    main()
