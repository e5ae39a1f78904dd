from itertools import product

import pytest

from karpkit.binprog import (
    EQ,
    GE,
    LE,
    BinaryProgram,
    ConstraintRow,
    ContractError,
    VarCapExceededError,
    VariableTag,
    num_slacks,
    solve_ip,
    to_equality_form,
)


def _vars(n):
    return tuple(VariableTag(("x", i)) for i in range(1, n + 1))


def _prog(n, rows):
    return BinaryProgram(_vars(n), tuple(rows))


def test_num_slacks_formula():
    assert num_slacks(0) == 0
    assert num_slacks(1) == 1
    assert num_slacks(5) == 3
    assert num_slacks(7) == 3
    assert num_slacks(8) == 4


def test_le5_row_gets_three_powers_of_two_slacks():
    # sum x_i <= 5 over five variables, gap 5 -> slacks 1, 2, 4
    row = ConstraintRow(tuple((i, 1) for i in range(5)), LE, 5, 5)
    eq = to_equality_form(_prog(5, [row]))
    assert eq.is_equality_form
    slack_terms = eq.rows[0].terms[5:]
    assert [c for _, c in slack_terms] == [1, 2, 4]
    assert all(eq.variables[i].origin[0] == "slack" for i, _ in slack_terms)


def test_single_slack_for_x1_le_1():
    row = ConstraintRow(((0, 1),), LE, 1, 1)
    eq = to_equality_form(_prog(1, [row]))
    assert eq.rows[0].relation == EQ
    assert eq.rows[0].terms == ((0, 1), (1, 1))
    assert eq.rows[0].rhs == 1


def test_surplus_row_brute_forced():
    # x1 + x2 >= 1  <->  x1 + x2 - s1 = 1, checked over all 8 assignments
    row = ConstraintRow(((0, 1), (1, 1)), GE, 1, 1)
    eq = to_equality_form(_prog(2, [row]))
    assert eq.rows[0].terms == ((0, 1), (1, 1), (2, -1))
    for x1, x2 in product((0, 1), repeat=2):
        original = x1 + x2 >= 1
        lifted = any(eq.satisfied_by((x1, x2, s)) for s in (0, 1))
        assert original == lifted


def test_zero_gap_row_converts_by_relation_change():
    row = ConstraintRow(((0, 1),), LE, 1, 0)
    eq = to_equality_form(_prog(1, [row]))
    assert eq.num_variables == 1
    assert eq.rows[0].relation == EQ


def test_equality_rows_pass_through():
    row = ConstraintRow(((0, 1),), EQ, 1, None)
    eq = to_equality_form(_prog(1, [row]))
    assert eq.rows == (row,)


def test_missing_slack_bound_is_contract_error():
    row = ConstraintRow(((0, 1),), LE, 1, None)
    with pytest.raises(ContractError):
        to_equality_form(_prog(1, [row]))


def test_equality_form_preserves_satisfiability_projected():
    # exhaustive round-trip on every program shape in a small family
    rows = [
        ConstraintRow(((0, 1), (1, 1), (2, 1)), LE, 2, 2),
        ConstraintRow(((0, 1), (2, -1)), GE, 0, 1),
    ]
    prog = _prog(3, rows)
    eq = to_equality_form(prog)
    n, total = prog.num_variables, eq.num_variables
    for bits in product((0, 1), repeat=n):
        original = prog.satisfied_by(bits)
        extended = any(
            eq.satisfied_by(bits + extra)
            for extra in product((0, 1), repeat=total - n)
        )
        assert original == extended


def test_bits_growth_of_slack_coefficients():
    # slacks 1,2,4 cost 2+3+4 bits with the sign convention; the measure
    # grows by exactly the slack terms' cost
    row = ConstraintRow(tuple((i, 1) for i in range(5)), LE, 5, 5)
    prog = _prog(5, [row])
    eq = to_equality_form(prog)
    assert eq.size("bits") - prog.size("bits") == (1 + 1) + (2 + 1) + (3 + 1)


def test_size_modes():
    prog = _prog(3, [ConstraintRow(((0, 1), (2, 3)), EQ, 4, None)])
    assert prog.size("element") == 3  # two nonzeros + one rhs
    empty = BinaryProgram((), ())
    assert empty.size("element") == 0


def test_validate_rejects_zero_coefficient():
    with pytest.raises(ContractError):
        _prog(1, [ConstraintRow(((0, 0),), EQ, 0, None)]).validate()


def test_validate_rejects_duplicate_origins():
    prog = BinaryProgram((VariableTag(("x", 1)), VariableTag(("x", 1))), ())
    with pytest.raises(ContractError):
        prog.validate()


def test_solve_ip_symmetric_pair():
    prog = _prog(2, [ConstraintRow(((0, 1), (1, 1)), EQ, 1, None)])
    # lexicographically first solution with x1 as most significant bit: (0,1)
    assert solve_ip(prog) == (0, 1)


def test_solve_ip_infeasible_rhs():
    prog = _prog(1, [ConstraintRow(((0, 1),), EQ, 2, None)])
    assert solve_ip(prog) is None


def test_solve_ip_var_cap():
    prog = _prog(30, [ConstraintRow(((0, 1),), EQ, 1, None)])
    with pytest.raises(VarCapExceededError):
        solve_ip(prog, var_cap=24)


def test_dump_is_readable():
    prog = _prog(2, [ConstraintRow(((0, 2), (1, -1)), LE, 1, 1)])
    text = prog.dump()
    assert "<=" in text and "2*" in text
