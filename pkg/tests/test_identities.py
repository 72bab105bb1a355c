import pytest

from monofock.fock.basis import TruncationSpec
from monofock.fock.identities import (
    check_right_commutation,
    check_unit_columns,
    right_commutation_table,
    run_all,
)


@pytest.mark.parametrize("size", [4, 5])
def test_all_relations_hold(size):
    trunc = TruncationSpec(max_index=size, max_level=size)
    for check in run_all(trunc):
        assert check.passed, f"{check.name}: {check.max_deviation}"


@pytest.mark.slow
def test_all_relations_hold_at_eight():
    trunc = TruncationSpec(max_index=8, max_level=8)
    assert all(check.passed for check in run_all(trunc))


def test_unit_columns(trunc3):
    check = check_unit_columns(trunc3)
    assert check.passed
    assert check.columns_checked == trunc3.dimension


def test_right_commutation_table(trunc5):
    table = right_commutation_table(3, 2, trunc5)
    assert set(table) == {(n, j) for n in range(1, 4) for j in range(1, 3)}
    assert all(value == 0 for value in table.values())
    assert check_right_commutation(trunc5).passed
