"""Smoke test for the zdgpoly extension module. Run after `maturin develop`."""

import json

import zdgpoly


def main() -> None:
    assert zdgpoly.factorize(75) == [(3, 1), (5, 2)]
    assert zdgpoly.euler_phi(75) == 40
    assert zdgpoly.proper_divisors(12) == [2, 3, 4, 6]
    assert zdgpoly.classify_family(105) == "PQR"

    classes, edges = zdgpoly.class_graph(75)
    assert classes == [(3, 20, False), (5, 8, False), (15, 4, True), (25, 2, False)]
    assert sorted(edges) == [(3, 25), (5, 15), (15, 25)]

    p = zdgpoly.dipoly(75)
    assert str(p) == "x^10 + 4x^21 + x^28"
    assert p.terms() == [(10, 1), (21, 4), (28, 1)]
    assert p.degree == 28 and p.eval_one() == 6
    assert zdgpoly.dipoly(15, engine="brute") == zdgpoly.Polynomial([0, 0, 1, 0, 1])

    doc = p.to_json(n=75)
    assert json.loads(doc)["coeffs"]["21"] == "4"
    assert zdgpoly.Polynomial.from_json(doc) == p

    r = zdgpoly.properties(zdgpoly.dipoly(18))
    assert (r.unimodal, r.logconcave, r.eta) == (False, True, 2)
    assert 15 in zdgpoly.properties(zdgpoly.dipoly(30)).logconcave_violations

    roots = zdgpoly.roots(p)
    assert roots.converged and roots.distinct_real == 3
    zeros = roots.zeros()
    assert len(zeros) == 28 and all(isinstance(z, complex) for z in zeros)
    assert roots.max_residual() <= 1e-8
    assert roots.csv().count("\n") == 29
    assert zdgpoly.count_real_roots(zdgpoly.dipoly(105)) == (1, 22)

    a = zdgpoly.audit(81)
    assert not a.matches and a.known_discrepancy and a.difference == "+x^18"
    assert zdgpoly.audit(243).matches

    lines = zdgpoly.verify(81, 81)
    assert lines[0].startswith("81 MISMATCH")
    assert "105,PQR,22,44,4," in zdgpoly.scan(100, 110)

    try:
        zdgpoly.dipoly(7)
    except zdgpoly.EmptyGraphError as e:
        assert "graph is empty" in str(e)
    else:
        raise AssertionError("prime n must raise")
    try:
        zdgpoly.dipoly(1000, engine="brute")
    except zdgpoly.SizeCapError:
        pass
    else:
        raise AssertionError("brute cap must raise")

    print("smoke test passed")


if __name__ == "__main__":
    main()
