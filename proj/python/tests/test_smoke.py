import json

import pytest

import detarr


def P(text, n):
    return detarr.Polynomial(text, n)


def test_polynomial_arithmetic_and_eval():
    d12 = detarr.minor(1, 2, 2)
    assert str(d12) == "-x2*y1 + x1*y2"
    assert d12 == P("x1*y2 - x2*y1", 2)
    assert d12.degree == 2
    assert (d12 - d12).is_zero()
    assert d12.eval({"x1": 2, "y2": 3, "x2": 5, "y1": 7}) == -29
    assert d12.derivative("y2") == P("x1", 2)


def test_big_integers_cross_the_boundary():
    big = 10**40 + 7
    p = P(f"{big}*x1", 1)
    assert p.eval({"x1": 3, "y1": 0}) == 3 * big


def test_exact_division():
    d12, d13 = detarr.minor(1, 2, 3), detarr.minor(1, 3, 3)
    assert detarr.exact_div(d12 * d13, d12) == d13
    assert detarr.exact_div(P("x1*y2", 3), d12) is None
    with pytest.raises(ValueError):
        detarr.exact_div(d12, P("0", 3))


def test_parse_error_is_a_value_error():
    with pytest.raises(detarr.ParseError):
        P("x1 +", 2)
    with pytest.raises(ValueError):
        P("x9", 2)


def test_graphs_and_chordality():
    c4 = detarr.Graph.cycle(4)
    verdict = detarr.is_chordal(c4)
    assert verdict["chordal"] is False
    assert verdict["witness"] == [1, 2, 3, 4]
    assert detarr.pdim_lower_bound(detarr.Graph.cycle(7)) == 4
    assert detarr.pdim_lower_bound(detarr.Graph.complete(6)) is None
    assert detarr.chordal_build_order(detarr.Graph(4, [(1, 2), (3, 4)])) == ([1, 2, 3, 4], [0, 1, 0, 1])
    with pytest.raises(detarr.GraphFormatError):
        detarr.Graph.parse("5\n0 5\n")


def test_saito_symbolic_and_randomized():
    for n in (3, 4):
        f = detarr.defining_poly(detarr.Graph.complete(n))
        report = detarr.saito_check(detarr.std_basis(n), f)
        assert report["basis"]
        assert abs(report["c_num"]) >= 1
    f5 = detarr.defining_poly(detarr.Graph.complete(5))
    r = detarr.saito_check(detarr.std_basis(5), f5, mode="randomized", seed=3)
    assert r["basis"] and r["determinant_degree"] == 20
    assert len(r["points"]) == 33 and r["seed"] == 3


def test_derivations():
    gamma = detarr.Derivation("y1*d/dy1 + y2*d/dy2 + y3*d/dy3", 3)
    d12 = detarr.minor(1, 2, 3)
    assert gamma(d12) == d12
    assert all(q == P("1", 3) for _, q in detarr.membership(gamma, detarr.Graph.complete(3)))
    dx1 = detarr.Derivation("d/dx1", 2)
    assert not detarr.is_logarithmic(dx1, detarr.minor(1, 2, 2))
    assert detarr.std_basis_names(4)[-1] == "phi0"


def test_poincare_and_homotopy():
    assert detarr.poincare_chordal(detarr.Graph.path(3))["text"] == "(1+t^3)(1+t)^2"
    k4 = detarr.poincare_complete(4)
    assert k4["expanded"][1] == 6 and k4["linear_term_count"] == 5
    assert detarr.homotopy_report(detarr.Graph.complete(4))["pi2"] == "0"
    with pytest.raises(detarr.NotChordalError) as info:
        detarr.poincare_chordal(detarr.Graph.cycle(5))
    assert info.value.witness == [1, 2, 3, 4, 5]


def test_cli_in_process():
    code, out, _ = detarr.run_cli(["--json", "poincare", "complete", "4"])
    assert code == 0
    assert json.loads(out)["factored_text"] == "(1+t^3)(1+t)^4(1+2t)"
    code, _, err = detarr.run_cli(["saito", "complete", "2"])
    assert code == 3 and "complete graphs" in err
