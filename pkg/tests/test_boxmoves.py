import pytest

from conftest import iter_strip_shapes
from lrlab.boxmoves import (BoxMove, apply_move, box_leq, box_successors,
                            dom_to_box_chain, dom_to_box_step, hasse,
                            relation_matrix)
from lrlab.tableaux import (Shape, dominance_leq, enumerate_tableaux, from_word,
                            reading_word)

ALGO = Shape((3, 2, 1), (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1))
RUNNING = Shape((3, 2), (4, 3, 3, 2, 1), (3, 2, 2, 1))


def test_figure_pair_reachable():
    shape = Shape((3, 2), (5, 4, 3, 2, 1), (4, 3, 2, 1))
    low = from_word(shape, (2, 1, 3, 2, 1))
    high = from_word(shape, (3, 2, 2, 1, 1))
    assert box_leq(low, high)
    assert not box_leq(high, low)
    assert box_leq(low, low)


def test_running_example_incomparable():
    t1, t2 = enumerate_tableaux(RUNNING)
    assert not box_leq(t1, t2)
    assert not box_leq(t2, t1)
    assert box_successors(t1) == []
    assert box_successors(t2) == []


def test_single_value_has_no_successors():
    shape = Shape((1, 1), (3, 2), (2, 1))
    for t in enumerate_tableaux(shape):
        assert box_successors(t) == []


def test_non_horizontal_strip_rejected():
    t = enumerate_tableaux(Shape((2,), (3,), (1,)))[0]
    with pytest.raises(ValueError):
        box_successors(t)


def test_bad_move_rejected():
    shape = Shape((2, 1), (5, 2, 1), (4, 1))
    low = from_word(shape, (1, 2, 1))
    with pytest.raises(ValueError):
        BoxMove(2, 1, 5, 2, 0, 1)  # u must be smaller
    with pytest.raises(ValueError):
        apply_move(low, BoxMove(1, 2, 5, 1, 0, 2))  # wrong source cells


def test_word_algorithm_example():
    low = from_word(ALGO, (1, 3, 2, 2, 1, 1))
    high = from_word(ALGO, (2, 3, 2, 1, 1, 1))
    assert reading_word(dom_to_box_step(low, high, pick_l=3)) == (2, 3, 1, 2, 1, 1)
    assert dom_to_box_step(low, high, pick_l=1) == low
    with pytest.raises(ValueError):
        dom_to_box_step(low, high, pick_l=2)  # position 2 holds 3, not y=2
    chain = dom_to_box_chain(low, high)
    assert chain[0] == low and chain[-1] == high and len(chain) == 2


def test_step_preconditions():
    low = from_word(ALGO, (1, 3, 2, 2, 1, 1))
    high = from_word(ALGO, (2, 3, 2, 1, 1, 1))
    with pytest.raises(ValueError):
        dom_to_box_step(high, low)  # not dominance-increasing
    with pytest.raises(ValueError):
        dom_to_box_step(low, low)  # not strict
    t1, t2 = enumerate_tableaux(RUNNING)  # not a vertical strip
    with pytest.raises(ValueError):
        dom_to_box_step(t1, t2)


def test_moves_are_inverse_pairs():
    for shape in iter_strip_shapes(9):
        for t in enumerate_tableaux(shape):
            for t2, move in box_successors(t):
                assert apply_move(t, move) == t2
                assert t2.shape == t.shape


def test_box_implies_dominance_exhaustive():
    for shape in iter_strip_shapes(9):
        for t in enumerate_tableaux(shape):
            for t2, _ in box_successors(t):
                assert dominance_leq(t, t2) and t != t2
                assert not dominance_leq(t2, t)


def test_dom_equals_box_on_double_strips():
    for shape in iter_strip_shapes(10, need_vertical=True):
        ts = enumerate_tableaux(shape)
        for a in ts:
            for b in ts:
                assert box_leq(a, b) == dominance_leq(a, b)


def test_chain_construction_exhaustive():
    for shape in iter_strip_shapes(10, need_vertical=True):
        ts = enumerate_tableaux(shape)
        for a in ts:
            for b in ts:
                if a != b and dominance_leq(a, b):
                    chain = dom_to_box_chain(a, b)
                    assert chain[0] == a and chain[-1] == b
                    for lo, hi in zip(chain, chain[1:]):
                        assert hi in [t for t, _ in box_successors(lo)]


def test_step_fixes_covering_pairs():
    # on a covering pair the only tableau between the two in dominance is
    # the bottom one, so the descent step must return it
    for shape in iter_strip_shapes(10, need_vertical=True):
        ts = enumerate_tableaux(shape)
        diagram = hasse(ts, "dom")
        for i, j in diagram.edges:
            assert dom_to_box_step(ts[i], ts[j]) == ts[i]


def test_hasse_three_chain():
    ts = enumerate_tableaux(Shape((3, 1), (4, 3, 2, 1), (3, 2, 1)))
    diagram = hasse(ts, "dom")
    assert diagram.edges == [(0, 1), (1, 2)]
    dot = diagram.to_dot()
    assert "n0 -> n1" in dot and "digraph dom" in dot
    data = diagram.to_json()
    assert data["edges"] == [[0, 1], [1, 2]]


def test_hasse_no_edges_cases():
    single = enumerate_tableaux(Shape((1,), (2, 1), (2,)))
    assert hasse(single, "dom").edges == []
    two = enumerate_tableaux(RUNNING)
    assert hasse(two, "box").edges == []
    with pytest.raises(ValueError):
        relation_matrix(two, "ext")


def test_relation_matrix_agrees_with_hasse_closure():
    ts = enumerate_tableaux(Shape((2, 1, 1), (4, 3, 2, 1), (3, 2, 1)))
    dom = relation_matrix(ts, "dom")
    box = relation_matrix(ts, "box")
    for i in range(len(ts)):
        for j in range(len(ts)):
            if box[i][j]:
                assert dom[i][j]
