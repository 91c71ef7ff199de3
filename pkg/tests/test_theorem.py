from fractions import Fraction

import pytest

from qgain.gain_graph import (GainGraph, GraphError, cycle_graph, cycle_gain, normalized_cycle,
                              path_graph, switch)
from qgain.quaternion import I, J, K, ONE, Q8, Quaternion
from qgain.theorem import (BudgetExceededError, CycleGainClass, EnumerationSummary,
                           EqualityCase, GirthUndefinedError, Q8Exhaustive, Q8Sampled,
                           RationalUnitSampled, TheoremReport, check_instances, check_theorem,
                           enumerate_and_check, four_cycles_all_one,
                           generate_extremal_complete_bipartite, generate_extremal_cycle,
                           graph_rank, pendant_cycle, predicted_cycle_rank, predicted_path_rank,
                           random_q8_unit, random_rational_unit, sign_power,
                           verify_bipartite_rank2_characterization, verify_cycle_recursion,
                           verify_pendant_cycle)

MINUS = -ONE


def _kpq(p, q, gains=None):
    return GainGraph(p + q, [(i, p + j, ONE) for i in range(p) for j in range(q)])


def test_path_prediction():
    assert [predicted_path_rank(n) for n in range(1, 7)] == [0, 2, 2, 4, 4, 6]
    with pytest.raises(ValueError):
        predicted_path_rank(0)


@pytest.mark.parametrize("n,h,cls,rank", [
    (4, ONE, CycleGainClass.EVEN_MATCHING_SIGN, 2),
    (6, MINUS, CycleGainClass.EVEN_MATCHING_SIGN, 4),
    (6, ONE, CycleGainClass.EVEN_OTHER, 6),
    (4, I, CycleGainClass.EVEN_OTHER, 4),
    (5, ONE, CycleGainClass.ODD_REAL_PART_NONZERO, 5),
    (5, J, CycleGainClass.ODD_REAL_PART_ZERO, 4),
    (3, K, CycleGainClass.ODD_REAL_PART_ZERO, 2),
])
def test_cycle_table(n, h, cls, rank):
    case = predicted_cycle_rank(n, h)
    assert case.gain_class is cls and case.predicted_rank == rank
    assert graph_rank(normalized_cycle(n, h)) == rank


def test_cycle_table_rational_gain():
    h = Quaternion(Fraction(3, 5), 0, Fraction(4, 5), 0)
    for n in range(3, 9):
        assert graph_rank(normalized_cycle(n, h)) == predicted_cycle_rank(n, h).predicted_rank


def test_sign_power():
    assert [sign_power(n) for n in (2, 4, 6, 8)] == [-1, 1, -1, 1]


def test_recursion_and_pendant():
    assert all(verify_cycle_recursion(n, h) for n in range(5, 9) for h in Q8)
    with pytest.raises(ValueError):
        verify_cycle_recursion(4, ONE)
    assert all(verify_pendant_cycle(n) for n in range(3, 8))
    with pytest.raises(ValueError):
        pendant_cycle(4, [ONE])


def test_check_theorem_examples():
    c6 = normalized_cycle(6, MINUS)
    assert check_theorem(c6).to_dict() == {
        "g": 6, "r": 4, "bound_holds": True, "equality": True, "case": "cycle",
        "characterization_holds": True}
    rep = check_theorem(_kpq(2, 3))
    assert (rep.g, rep.r, rep.equality_case) == (4, 2, EqualityCase.COMPLETE_BIPARTITE)
    rep = check_theorem(cycle_graph(4))
    assert (rep.g, rep.r, rep.equality_case) == (4, 2, EqualityCase.BOTH)
    rep = check_theorem(cycle_graph(5))
    assert (rep.g, rep.r, rep.equality) == (5, 5, False)
    assert "case" not in rep.to_dict()
    rep = check_theorem(cycle_graph(6))
    assert (rep.r, rep.equality, rep.equality_case) == (6, False, EqualityCase.NONE)


def test_check_theorem_errors():
    with pytest.raises(GirthUndefinedError):
        check_theorem(path_graph(4))
    with pytest.raises(GraphError):
        check_theorem(GainGraph(6, [(0, 1), (1, 2), (2, 0)]))


def test_case_one_is_orientation_independent(rng):
    for g_even in (4, 6, 8):
        base = generate_extremal_cycle(g_even)
        for _ in range(5):
            theta = [random_rational_unit(rng) for _ in range(g_even)]
            h = switch(base, theta)
            assert check_theorem(h).equality_case in (EqualityCase.CYCLE, EqualityCase.BOTH)
            c = list(range(g_even))
            assert cycle_gain(h, c[::-1]) == cycle_gain(h, c[3:] + c[:3]) == sign_power(g_even)


def test_report_roundtrip():
    for g in (cycle_graph(4), cycle_graph(5), _kpq(3, 3)):
        rep = check_theorem(g)
        assert TheoremReport.from_dict(rep.to_dict()) == rep


def test_generators():
    with pytest.raises(ValueError):
        generate_extremal_cycle(5)
    with pytest.raises(ValueError):
        generate_extremal_complete_bipartite(1, 3, [ONE], [ONE] * 3)
    with pytest.raises(ValueError):
        generate_extremal_complete_bipartite(2, 2, [ONE], [ONE] * 2)
    assert generate_extremal_cycle(8) == cycle_graph(8)


def test_bipartite_characterization(rng):
    g = generate_extremal_complete_bipartite(3, 3, [random_q8_unit(rng) for _ in range(3)],
                                             [random_rational_unit(rng) for _ in range(3)])
    assert graph_rank(g) == 2 and four_cycles_all_one(g)
    assert verify_bipartite_rank2_characterization(g)
    bad = GainGraph(4, [(0, 2, ONE), (0, 3, ONE), (1, 2, ONE), (1, 3, I)])
    assert not four_cycles_all_one(bad)
    assert verify_bipartite_rank2_characterization(bad)
    with pytest.raises(GraphError):
        verify_bipartite_rank2_characterization(cycle_graph(5))


def test_enumeration_small_exhaustive():
    s = enumerate_and_check(4, Q8Exhaustive())
    assert not s.violations
    assert s.graphs_checked == 23
    # K3; 15 four-edge, 6 five-edge, 1 six-edge graphs on four vertices
    assert s.instances_checked == 8 ** 3 + 15 * 8 ** 4 + 6 * 8 ** 5 + 8 ** 6
    # only C_4 (3 labelings, 512 assignments each with cycle gain 1)
    assert s.case_counts()["both"] == 3 * 8 ** 3 and len(s.equality_instances) == 1536


def test_enumeration_sampled_and_rational():
    s = enumerate_and_check(5, Q8Sampled(20, 1))
    assert not s.violations and s.instances_checked == 626 * 20
    r = enumerate_and_check(4, RationalUnitSampled(3, 0))
    assert not r.violations and r.instances_checked == 23 * 3


def test_enumeration_deterministic():
    a = enumerate_and_check(5, Q8Sampled(5, 9), min_n=5).to_dict(include_instances=True)
    b = enumerate_and_check(5, Q8Sampled(5, 9), min_n=5).to_dict(include_instances=True)
    assert a == b


def test_budget_downgrade():
    s = enumerate_and_check(4, Q8Exhaustive(downgrade_samples=4), budget=8 ** 4, min_n=4)
    assert s.sampled_graphs > 0 and s.exhaustive_graphs > 0 and not s.violations
    with pytest.raises(BudgetExceededError):
        enumerate_and_check(4, Q8Exhaustive(), budget=8 ** 4, allow_downgrade=False)
    with pytest.raises(ValueError):
        enumerate_and_check(8, Q8Sampled(1, 0))
    with pytest.raises(TypeError):
        enumerate_and_check(3, object())


def test_injected_extremal_instances_all_equal(rng):
    gens = [generate_extremal_cycle(g) for g in (4, 6, 8)]
    gens += [generate_extremal_complete_bipartite(
        p, q, [random_rational_unit(rng) for _ in range(p)],
        [random_q8_unit(rng) for _ in range(q)]) for p in (2, 3) for q in (2, 4)]
    s = check_instances(gens)
    assert not s.violations and len(s.equality_instances) == len(gens)
    assert s.case_counts()["none"] == 0


def test_summary_merge_is_order_independent():
    a = enumerate_and_check(4, Q8Sampled(6, 1), min_n=4)
    b = enumerate_and_check(3, Q8Exhaustive())
    assert a.merge(b).to_dict(True) == b.merge(a).to_dict(True)
    assert EnumerationSummary().to_dict()["violations"] == 0
