from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qgain.gain_graph import GainGraph, cycle_graph
from qgain.qgg import (QggError, QggFile, format_qgg, format_theta, parse_qgg, parse_theta)
from qgain.quaternion import I, J, ONE, Quaternion

from conftest import units

C4 = "qgg 1\nn 4\ne 0 1 1 0 0 0\ne 0 3 1 0 0 0\ne 1 2 1 0 0 0\ne 2 3 1 0 0 0\n"


def test_canonical_roundtrip():
    assert format_qgg(parse_qgg(C4)) == C4


@settings(max_examples=50, deadline=None)
@given(st.lists(units, min_size=5, max_size=5))
def test_roundtrip_random_gains(gains):
    g = cycle_graph(5, gains)
    text = format_qgg(g)
    assert parse_qgg(text).to_gain_graph() == g
    assert format_qgg(parse_qgg(text)) == text


def test_comments_and_blank_lines():
    doc = parse_qgg("# hi\n\nqgg 1  # header\nn 2\n# edge next\ne 0 1 3/5 4/5 0 0\n")
    assert doc.edges == ((0, 1, Quaternion(Fraction(3, 5), Fraction(4, 5))),)
    assert doc.exact


def test_sorted_output():
    doc = parse_qgg("qgg 1\nn 3\ne 1 2 1 0 0 0\ne 0 1 0 1 0 0\n")
    assert [(u, v) for u, v, _ in doc.edges] == [(0, 1), (1, 2)]


def test_empty_edge_file():
    doc = parse_qgg("qgg 1\nn 3\n")
    assert doc.edges == () and doc.to_gain_graph().n == 3


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("qgg 2\nn 2\n", 1),
    ("qgg 1\ne 0 1 1 0 0 0\n", 2),
    ("qgg 1\nn 2\nn 2\n", 3),
    ("qgg 1\nn x\n", 2),
    ("qgg 1\nn 3\ne 1 0 1 0 0 0\n", 3),
    ("qgg 1\nn 3\ne 0 3 1 0 0 0\n", 3),
    ("qgg 1\nn 3\ne 0 1 1 0 0 0\ne 0 1 1 0 0 0\n", 4),
    ("qgg 1\nn 3\ne 0 1 1 1 0 0\n", 3),
    ("qgg 1\nn 3\ne 0 1 1 0 0\n", 3),
    ("qgg 1\nn 3\ne 0 1 0.6 0.8 0 0\n", 3),
    ("qgg 1\nn 3\ne a 1 1 0 0 0\n", 3),
    ("qgg 1\nn 3\nx 0 1\n", 3),
    ("qgg 1\n", 1),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(QggError) as exc:
        parse_qgg(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_lenient_decimals():
    doc = parse_qgg("qgg 1\nn 2\ne 0 1 0.6 0.8 0 0\n", lenient=True)
    assert not doc.exact
    with pytest.raises(QggError):
        doc.to_gain_graph()
    near = parse_qgg("qgg 1\nn 2\ne 0 1 0.7071067811865476 0.7071067811865476 0 0\n",
                     lenient=True)
    assert not near.exact
    with pytest.raises(QggError):
        parse_qgg("qgg 1\nn 2\ne 0 1 0.7 0.7 0 0\n", lenient=True)


def test_adjacency_from_file():
    doc = parse_qgg("qgg 1\nn 2\ne 0 1 0 1 0 0\n")
    A = doc.adjacency()
    assert A[0, 1] == I and A[1, 0] == -I


def test_theta_roundtrip_and_errors():
    theta = (ONE, I, J)
    assert parse_theta(format_theta(theta), 3) == theta
    with pytest.raises(QggError):
        parse_theta("theta 1\nt 0 1 0 0 0\n", 2)
    with pytest.raises(QggError):
        parse_theta("theta 1\nt 0 1 0 0 0\nt 0 1 0 0 0\n", 1)
    with pytest.raises(QggError):
        parse_theta("theta 1\nt 0 2 0 0 0\n", 1)
    with pytest.raises(QggError):
        parse_theta("theta 1\nt 5 1 0 0 0\n", 1)
    with pytest.raises(QggError):
        parse_theta("qgg 1\n", 1)
    with pytest.raises(QggError):
        parse_theta("", 1)
    with pytest.raises(QggError):
        parse_theta("theta 1\nt 0 1 0 0\n", 1)


def test_from_gain_graph():
    g = GainGraph(3, [(2, 1, J)])
    assert QggFile.from_gain_graph(g).edges == ((1, 2, -J),)
