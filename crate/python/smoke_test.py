"""Smoke test for the `circulant` extension module."""

import json

import circulant


def main() -> None:
    rep = circulant.enumerate(3, 3, "undirected")
    assert rep.total() == 928, rep
    rep.check_invariants()
    assert rep.get("A") == rep.polynomial()
    assert sum(rep.polynomial().coefficients().values()) == 928

    assert circulant.enumerate(3, 3, "directed").total() == 3728891
    assert circulant.enumerate(5, 2, "u").total() == 423

    sc = circulant.self_complementary(5, 3, "directed")
    assert sc["total"] == 46116860227224068

    checks = circulant.identities(5, "undirected")
    assert len(checks) == 10 and all(h for _, _, h in checks)

    rings, g = circulant.structural(27)
    assert g.total() == 928 and g == circulant.enumerate(3, 3, "u").polynomial()
    assert len(rings) > 0

    assert circulant.brute_force(9, "d") == circulant.enumerate(3, 2, "d").polynomial()
    assert circulant.criterion(3, 3, "u") == circulant.enumerate(3, 3, "u").polynomial()

    poly = circulant.Polynomial("t^2+3t+1")
    assert poly.coefficients() == {0: 1, 1: 3, 2: 1}
    assert circulant.Polynomial.from_json(poly.to_json()) == poly
    assert json.loads(rep.to_json())["p"] == 3
    assert (poly * poly).evaluate(1) == 25

    try:
        circulant.enumerate(2)
    except ValueError as e:
        assert "p must be an odd prime" in str(e)
    else:
        raise AssertionError("p = 2 accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
