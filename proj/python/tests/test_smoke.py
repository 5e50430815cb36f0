import json

import pytest

import coxkit


def test_group_basics():
    s4 = coxkit.Group("A3")
    assert len(s4) == 24
    assert s4.complete
    assert s4.rank == 3
    w0 = s4.locate("s0s1s0s2s1s0")
    assert s4.length(w0) == 6
    assert s4.locate([0, 1, 0]) == s4.locate("s1s0s1")
    assert len(s4.reflections()) == 6


def test_polynomial_and_orders():
    s4 = coxkit.Group("A3")
    assert s4.gen_poly(1) == [1, 5, 10, 7, 1]
    assert coxkit.format_poly(s4.gen_poly(1)) == "1+5x+10x^2+7x^3+x^4"
    l1 = s4.order("lk", 1)
    assert len(l1.covers()) == 52
    assert l1.is_graded()
    l2 = s4.order("lk", 2)
    bruhat = s4.order("bruhat")
    assert all(l2.leq(u, v) == bruhat.leq(u, v) for u in range(24) for v in range(24))
    torder = s4.order("torder")
    assert len(torder) == 6 and len(torder.covers()) == 6
    assert "digraph" in torder.to_dot()


def test_noncrossing_interval():
    s4 = coxkit.Group("A3")
    absolute = s4.order("absolute", 2)
    c = s4.coxeter_elements()[0]
    interval = absolute.interval(0, absolute.origin.index(c))
    assert len(interval) == 14
    assert interval.isomorphic(coxkit.nc_lattice(4))


def test_errors():
    with pytest.raises(coxkit.ValidationError):
        coxkit.Group("~A2")
    with pytest.raises(coxkit.ValidationError):
        coxkit.Group("Q7")
    with pytest.raises(coxkit.ValidationError):
        coxkit.run_check_suite(["A2"], [])
    ball = coxkit.Group("~A2", radius=3)
    assert not ball.complete
    with pytest.raises(coxkit.OutOfBallError):
        ball.t_k(2)


def test_check_suite_and_json():
    report = coxkit.run_check_suite(["B3"], ["phi"])
    assert report["schema"] == 1
    phi = [r for r in report["results"] if r["check"] == "phi"][0]
    assert phi["status"] == "pass"
    assert phi["data"]["k0"]["graded"] is False
    ball = coxkit.Group("A2").to_json()
    assert ball["inf_token"] == 0
    assert len(ball["elements"]) == 6
    json.dumps(ball)


def test_dihedral_and_curvature():
    i7 = coxkit.Group("I2(7)")
    assert coxkit.dihedral_formula(7, 1) == i7.gen_poly(1)
    assert coxkit.is_log_concave(i7.gen_poly(1))
    kappas = {kappa for _, _, kappa in coxkit.Group("A2").curvature(0)}
    assert kappas == {"0"}
