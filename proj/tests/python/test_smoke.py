import nsmac


def test_small_polynomial_text():
    f = nsmac.E([0, 1, 0])
    assert f.text(head=[0, 1, 0]) == "x2 + ((1-t)/(1-q*t^2))*x1"
    assert f.vars == 3
    assert len(f) == 2


def test_engines_agree():
    for mu in ([0, 1, 0], [2, 0, 0], [0, 1, 1], [0, 0, 2]):
        assert nsmac.E(mu) == nsmac.E_recurrence(mu)


def test_parse_round_trip():
    f = nsmac.E([0, 2, 0])
    assert nsmac.parse(f.text(), f.vars) == f
    assert nsmac.parse("x1 + x2", 2) == nsmac.parse("x2 + x1", 2)


def test_symmetric_routes():
    lam = [2, 1, 0]
    sym = nsmac.P_symmetrized(lam, checked=False)
    assert sym.is_symmetric()
    assert nsmac.P_truncated(lam, [1, 0, 2], 3, checked=False) == sym
    assert nsmac.J([1, 1], 2) == nsmac.J_stable([1, 1], [1, 1], 2, checked=False)
    assert nsmac.schur_keys([2, 1, 0], 3) == nsmac.schur_tableaux([2, 1, 0], 3)


def test_integral_form_and_json():
    f = nsmac.E_integral([1, 0, 0])
    assert f.text() == "(1-q*t^3)*x1"
    terms = f.to_json()
    assert terms[0]["x"] == [1, 0, 0]
    assert all(entry["den"] == [[0, 0, "1"]] for entry in terms)


def test_filling_stats():
    stats = nsmac.filling_stats([2, 1, 3, 0, 0, 2], [[1, 2, 3, 5], [6, 4, 5], [2]])
    assert stats["non_attacking"]
    assert stats["maj"] == 3
    assert stats["inv_pairs"] == 25
    assert stats["inv"] == 15
    assert stats["coinv"] == 2
    assert stats["inversion_triples"] == 15
    assert stats["descents"] == [(3, 2), (1, 2)]


def test_count_and_verify():
    assert nsmac.count_non_attacking([1, 0, 0]) == 1
    assert nsmac.count_non_attacking([0, 1, 0]) == 2
    assert nsmac.count_non_attacking([0] * 8 + [30]) == 9**30
    results = nsmac.run_verify("appendix-table")
    assert results and all(r["pass"] for r in results)
