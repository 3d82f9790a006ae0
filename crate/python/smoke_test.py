"""Smoke test for the pyfinmagma extension module."""

import pyfinmagma as fm


def main():
    l = fm.loop_ln(5, 2)
    assert l.order == 6 and l.kind == "loop"
    assert l.labels == ["e", "1", "2", "3", "4", "5"]
    assert l.op("1", "2") == "3"
    assert not l.is_commutative()
    assert fm.loop_ln(5, 3).is_commutative()

    holds, witness = fm.loop_ln(7, 3).check_identity("WIP")
    assert holds and witness is None

    n = fm.build("N(Ln(5,3))")
    assert n.order == 12
    assert n.classify()["lagrange"] == "lagrange"
    assert "LAGRANGE=lagrange" in fm.classify("N(Ln(5,3))")

    ms = fm.build("U(N(Set(5;mul;1,2,3,4)),C(9))")
    assert ms.order == 17
    assert ms.classify()["lagrange"] == "free"
    assert "neutrosophic-bigroup" in ms.taxa()

    r = fm.verify("T-count-Ln", "5..=15")
    assert r["status"] == ["pass"], r
    assert "T-biloop" in fm.check_ids()

    diff = fm.regenerate_and_diff("N(L5(2))")
    assert len(diff) == 2 and all(d[4] for d in diff)

    try:
        fm.build("Ln(5,5)")
    except ValueError as e:
        assert "1 < m < n" in str(e)
    else:
        raise AssertionError("inadmissible spec accepted")

    try:
        fm.verify("T-none")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown check accepted")

    print("pyfinmagma smoke test: ok")


if __name__ == "__main__":
    main()
