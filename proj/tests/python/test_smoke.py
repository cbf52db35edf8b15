"""Smoke tests for the Python bindings; exact values only."""

from fractions import Fraction

import bkptau as bt


def frac(s):
    return Fraction(s)


def test_q_function_coefficients():
    q = bt.q_lambda([2, 1])
    assert frac(q.coefficient({1: 3})) == Fraction(4, 3)
    assert frac(q.coefficient({3: 1})) == -4


def test_bgw_routes_agree():
    a = bt.bgw_tau("1/3", "1", 5)
    b = bt.bgw_cutjoin("1/3", "1", 5)
    assert a == b
    assert frac(a.coefficient({1: 1})) == Fraction(1, 1) * (1 - Fraction(4, 9)) / 16


def test_hypergeometric_and_cutjoin():
    direct = bt.hypergeometric_tau(u=["1/3", "1/5"], cutoff=5)
    assert bt.cutjoin_tau(u=["1/3", "1/5"], cutoff=5, strategy="qbasis") == direct
    assert bt.cutjoin_tau(u=["1/3", "1/5"], cutoff=5, strategy="tspace") == direct


def test_hirota_verdicts():
    assert bt.is_bkp_tau(bt.bgw_tau("0", "1", 8), 4, 4)["pass"]
    bad = bt.series_from_json(
        '{"alphabet":"T","cutoff":6,"terms":'
        '[{"mono":{},"coeff":"1"},{"mono":{"1":3},"coeff":"1"}]}'
    )
    verdict = bt.is_bkp_tau(bad, 3, 3)
    assert not verdict["pass"]
    assert frac(verdict["value"]) != 0


def test_wave_function():
    psi = bt.wave_function(bt.bgw_tau("0", "1", 6), 6)
    assert frac(psi[0]) == 1
    assert frac(psi[-1]) == Fraction(-1, 8)


def test_hurwitz_table_diagonal():
    rows = bt.hurwitz_table(u=["0"], cutoff=3)
    table = {(tuple(l), tuple(m)): frac(c) for l, m, c in rows}
    assert table[((), ())] == 1
    assert table[((1,), (1,))] == Fraction(1, 8)
    assert all(l == m for (l, m) in table)


def test_json_round_trip():
    tau = bt.bgw_tau("3/2", "1", 6)
    again = bt.series_from_json(tau.to_json())
    assert again == tau
