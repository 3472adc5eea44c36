"""Smoke test for the foulkes Python extension.

Build and install first:  maturin develop -m crates/python/Cargo.toml
"""

import json

import foulkes


def main():
    nu = foulkes.Partition([2, 1, 1])
    assert nu.weight == 4
    assert nu.conjugate().parts == [3, 1]
    assert foulkes.Partition("3,3,2").dominance([4, 2, 1, 1]) == "incomparable"

    mins = foulkes.min_constituents(2, nu)
    assert [c.label.parts for c in mins] == [[4, 2, 1, 1], [3, 3, 2]]
    assert mins[0].witness.families == [[[1, 2], [1, 3], [1, 4]], [[1, 2]]]
    maxs = foulkes.max_constituents(2, [2, 1, 1])
    assert [c.label.parts for c in maxs] == [[6, 1, 1], [5, 3]]

    expansion = foulkes.expand(2, [2, 1, 1])
    assert expansion[(4, 2, 1, 1)] == 1 and (2, 2, 2, 2) not in expansion
    assert foulkes.verify(2, [2, 1, 1])
    assert foulkes.multiplicity(3, [4, 4], [4] * 6) >= 1

    assert foulkes.agaoka(2, 4).parts == [4, 3, 1]
    assert [p.parts for p in foulkes.theta(4)] == [[5, 1, 1, 1], [4, 3, 1]]

    t = foulkes.FamilyTuple.from_json(
        json.dumps({"m": 2, "kind": "set", "families": [[[1, 2], [1, 3], [1, 4]], [[1, 2]]]})
    )
    assert t.is_closed() and t.is_minimal()
    assert foulkes.certificate(t, [2, 1, 1]).parts == [4, 2, 1, 1]
    assert json.loads(t.to_json())["kind"] == "set"

    try:
        foulkes.expand(3, [3, 3])
    except foulkes.DegreeGuardError:
        pass
    else:
        raise AssertionError("guard not enforced")

    print("smoke test passed")


if __name__ == "__main__":
    main()
