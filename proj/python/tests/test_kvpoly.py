from fractions import Fraction

import pytest

import kvpoly
from kvpoly import oracles


def test_unknot_values():
    assert str(kvpoly.kv_oriented(kvpoly.unknot(), 2)) == "1*v^-12 + 1*v^-6 + 2 + 1*v^6 + 1*v^12"
    for n in (1, 2):
        assert kvpoly.kv_unoriented(kvpoly.unknot(False), n) == oracles.double_loop(n)


def test_two_strand_graph_values():
    g = kvpoly.twist_closure(1, 1)
    assert str(kvpoly.kv_singular(g, 1)) == "-1*v^-13 + -2*v^-7 + -2*v^-1 + -1*v^5"
    bar = kvpoly.kv_unoriented(kvpoly.twist_closure_unoriented(1, 2), 1)
    assert bar == oracles.st_unoriented(1, 1)
    assert not bar.is_laurent()


def test_scalar_arithmetic():
    three = oracles.loop(1)
    assert three.q_str() == "1*q^-1 + 1 + 1*q^1"
    assert three.eval(1) == 3
    assert (three / three) == kvpoly.Scalar(1)
    x = kvpoly.Scalar(1) / oracles.loop(1)
    assert not x.is_laurent()
    assert x.eval(Fraction(2)) == 1 / three.eval(2)
    assert kvpoly.Scalar.parse(str(x)) == x


def test_diagram_round_trip_and_moves():
    g = kvpoly.random_diagram(3, 4)
    h = kvpoly.Diagram.parse(str(g))
    assert g.isomorphic(h)
    base = kvpoly.kv_oriented(g, 2)
    sites = g.move_sites()
    assert sites
    for m in sites[:5]:
        assert kvpoly.kv_oriented(g.apply(m), 2) == base


def test_webs_and_errors():
    theta = kvpoly.reduce_web("T3s >a >b >c\nT3k <a <c <b\n")
    assert theta == kvpoly.Scalar.parse("1*v^-3 + 1*v^3") * oracles.loop(1)
    with pytest.raises(kvpoly.ParseError):
        kvpoly.Diagram.parse("V >a <b <a >b\n")
    with pytest.raises(ValueError):
        kvpoly.reduce_web("T3s >a >b\n")
