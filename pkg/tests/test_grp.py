from __future__ import annotations

import cmath
import json
import math
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from qmodular.cyclo import get_ring
from qmodular.grp import (
    CAP_EXCEEDED,
    FINISHED,
    Word,
    analyze,
    closure,
    element_order,
    group_closure,
    group_table_document,
    is_closed,
    laurent_word_eval,
    matrix_key,
    specialize,
    spectrum_data,
    word_eval,
)
from qmodular.matrix import Mat2

GOLDEN = Path(__file__).parent / "golden"


def numeric_order(n: int, cap: int = 5000) -> int | None:
    """Closure over complex floats, keyed by rounded entries; shares no code with the exact path."""
    z = cmath.exp(2j * math.pi / n)
    R = (z, 1, 0, 1)
    S = (0, -1 / z, 1, 0)

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def key(m):
        return tuple((round(v.real, 6) + 0.0, round(v.imag, 6) + 0.0) for v in map(complex, m))

    ident = (1, 0, 0, 1)
    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in (R, S):
                p = mul(g, m)
                k = key(p)
                if k not in seen:
                    seen.add(k)
                    nxt.append(p)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return len(seen)


def test_specialize_examples():
    R, S = specialize(2)
    assert R == Mat2(*map(get_ring(2), (-1, 1, 0, 1)))
    assert S == Mat2(*map(get_ring(2), (0, 1, 1, 0)))
    R1, S1 = specialize(1)
    assert (R1.a, R1.b, S1.b) == (1, 1, -1)
    ring6 = get_ring(6)
    omega = ring6.zeta ** 4  # the cube root with -omega = zeta_6
    assert specialize(6)[1] == Mat2(ring6.zero, omega ** 2, ring6.one, ring6.zero)


def test_word_parsing_and_printing():
    w = Word.parse("S^2 R^2 S R S R^2 S")
    assert str(w) == "S^2 R^2 S R S R^2 S"
    assert Word.parse("R R^-1") == Word.parse("E") == Word(())
    assert str(Word.parse("R^2 R")) == "R^3"
    assert len(Word.parse("S^-2 R^3")) == 5
    with pytest.raises(ValueError):
        Word.parse("R^")


def test_word_eval_examples():
    ring2 = get_ring(2)
    assert word_eval("R S", 2) == Mat2(*map(ring2, (1, -1, 1, 0)))
    ring5 = get_ring(5)
    z = ring5.zeta
    assert word_eval("S^2 R^2 S R S R^2 S", 5) == Mat2(*map(ring5, (0, 1, -1, 1)))
    assert word_eval("S R S^5", 5) == Mat2(-z ** 2, ring5.zero, z ** 3, -z ** 3)


@pytest.mark.parametrize("n,order", [(2, 12), (3, 72), (4, 96), (5, 600)])
def test_orders_agree_with_numeric_closure(n, order):
    out = group_closure(n)
    assert out.verdict == FINISHED and out.order == order
    assert numeric_order(n) == order
    assert is_closed(out)


def test_small_cap_and_infinite_case():
    assert closure(list(specialize(2)), cap=100).order == 12
    assert group_closure(6, cap=1000).verdict == CAP_EXCEEDED
    assert numeric_order(6, cap=3000) is None
    with pytest.raises(ValueError):
        analyze(group_closure(6, cap=200))


@pytest.mark.parametrize("n,sl,scal,center,quot", [
    (2, 6, 2, 2, 6), (3, 24, 6, 6, 12), (4, 24, 4, 4, 24), (5, 120, 10, 10, 60)])
def test_group_reports(n, sl, scal, center, quot):
    rep = analyze(group_closure(n))
    assert (rep.sl_size, rep.scalar_size, rep.center_size, rep.quotient_order) == (sl, scal, center, quot)
    assert rep.quotient_order * rep.scalar_size == rep.order
    # determinant classes partition the group and the scalars are exactly <zeta E, -E>
    assert sum(rep.det_classes.values()) == rep.order and -1 not in rep.det_classes
    ring = get_ring(n)
    expected = {(s * ring.zeta_pow(j)).coeffs for j in range(n) for s in (1, -1)}
    assert {m.a.coeffs for m in rep.scalars} == expected
    gens = specialize(n)
    assert all(m * g == g * m for m in rep.scalars for g in gens)


def test_element_orders():
    assert element_order(word_eval("R S", 2)) == 6
    assert element_order(specialize(4)[0]) == 4
    assert element_order(word_eval("R^3 S", 6), cap=100) is None


def test_spectrum_examples():
    ring6 = get_ring(6)
    t, d, disc = spectrum_data(word_eval("R^3 S", 6))
    z = ring6.zeta
    assert t == 1 + z + z ** 2 and d == z ** 2 and disc.is_zero()
    ident = specialize(3)[0].identity()
    assert spectrum_data(ident) == (2, 1, 0)
    for n in (5, 7, 9):
        ring = get_ring(n)
        for j in range(1, n):
            t, d, _ = spectrum_data(word_eval(f"R^{j} S", n))
            assert t == sum((ring.zeta_pow(k) for k in range(j)), ring.zero)
            assert d == ring.zeta_pow(j - 1)


def test_stored_words_are_shortest():
    out = group_closure(3)
    # BFS depth of each element, computed independently
    R, S = specialize(3)
    movers = [R, R.inverse(), S, S.inverse()]
    frontier = [R.identity()]
    dist = {matrix_key(frontier[0]): 0}
    k = 0
    while frontier:
        k += 1
        nxt = []
        for m in frontier:
            for g in movers:
                p = g * m
                if matrix_key(p) not in dist:
                    dist[matrix_key(p)] = k
                    nxt.append(p)
        frontier = nxt
    for e in out.elements:
        assert len(e.word) == dist[e.key]
        assert word_eval(e.word, 3) == e.matrix


words = st.lists(st.tuples(st.sampled_from("RS"), st.integers(-4, 4)), max_size=6).map(
    lambda syl: Word(tuple(syl)))


@settings(max_examples=50)
@given(words, words, st.sampled_from([2, 3, 5, 6, 7]))
def test_word_eval_respects_concatenation(w1, w2, n):
    assert word_eval(w1 * w2, n) == word_eval(w1, n) * word_eval(w2, n)
    assert word_eval(w1 * w1.inverse(), n) == specialize(n)[0].identity()


@settings(max_examples=30)
@given(words, st.sampled_from([3, 4, 5, 8]))
def test_specialization_commutes_with_evaluation(w, n):
    ring = get_ring(n)
    assert laurent_word_eval(w).map(lambda f: f.eval(ring.zeta)) == word_eval(w, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_golden_tables(n):
    golden = json.loads((GOLDEN / f"group_n{n}.json").read_text())
    fresh = group_table_document(group_closure(n))
    assert fresh == golden
    ring = get_ring(n)
    # replay every stored word against the stored entries
    for el in golden["elements"]:
        m = word_eval(el["word"], n)
        assert [list(x.coeffs) for x in m] == el["entries"]
        assert list(m.trace().coeffs) == el["trace"]
        assert ring.zeta_pow(el["det_power"]) == m.det()
    keys = [el["key"] for el in golden["elements"]]
    assert keys == sorted(keys, key=lambda k: tuple(map(int, k.split(","))))
