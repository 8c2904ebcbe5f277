"""Smoke tests for the python bindings; runs standalone or under pytest."""

import chevweil

KUMMER2 = "family = kummer\nn = 2\n"


def test_certify():
    rep = chevweil.certify(KUMMER2)
    assert rep["verdict"] == "IsCover"
    assert rep["bad_primes"]["finite"] == ["2"]
    assert rep["bad_primes"]["infinity"] is True
    assert rep["exit"] == 0


def test_verify():
    rep = chevweil.verify(KUMMER2, [["4", "1/4"], ["-1", "-1"]])
    assert rep["exit"] == 0
    assert rep["counts"]["violations"] == 0
    assert rep["counts"]["points"] == 2

    forced = chevweil.verify(KUMMER2, [["-1", "-1"]], force_s=["inf"])
    assert forced["exit"] == 1
    assert [v["prime"] for v in forced["violations"]] == ["2"]


def test_lift():
    orbits = chevweil.lift(KUMMER2, ["4", "1/4"])
    assert [o.get("rational") for o in orbits] == [["2", "1/2"], ["-2", "-1/2"]]

    quad = chevweil.lift(KUMMER2, ["-1", "-1"])
    assert len(quad) == 1
    assert quad[0]["dependence"] == "theta^2 + 1"
    assert quad[0]["degree"] == 2


def test_fermat():
    rep = chevweil.fermat(1, 1, 1, 2, 3, 7, bound=10)
    assert rep["class"] == "hyperbolic"
    assert rep["count"] == 8
    assert chevweil.classify(2, 3, 5) == "spherical"
    assert chevweil.classify(3, 3, 3) == "euclidean"


def test_cusp_and_s_units():
    assert chevweil.cusp_check(1000) is True
    units = chevweil.s_units([2], 10000)
    assert len(units) == 54
    assert "1/2" in units and "-64" in units


def main():
    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_"):
            continue
        try:
            fn()
            print(f"PASS {name}")
        except AssertionError as e:
            failed += 1
            print(f"FAIL {name}: {e}")
    return failed


if __name__ == "__main__":
    raise SystemExit(main())
