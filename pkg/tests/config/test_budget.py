import pytest
from pydantic import ValidationError

from bisetkit.config import BUDGET_ENV, Budget, parse_budget_pairs
from bisetkit.errors import BudgetExceededError


def test_parse_budget_pairs():
    assert parse_budget_pairs("max_depth=3, max_points = 100") == {
        "max_depth": 3,
        "max_points": 100,
    }
    assert parse_budget_pairs("") == {}
    with pytest.raises(ValueError):
        parse_budget_pairs("max_depth")
    with pytest.raises(ValueError):
        parse_budget_pairs("max_depth=deep")


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "max_depth=4")
    assert Budget.from_env().max_depth == 4
    assert Budget.from_env("max_word_length=2").max_word_length == 2
    monkeypatch.delenv(BUDGET_ENV)
    assert Budget.from_env() == Budget()


def test_budget_overrides_are_checked():
    with pytest.raises(ValueError):
        Budget().with_overrides({"max_colour": 1})
    with pytest.raises(ValidationError):
        Budget().with_overrides({"max_points": 0})


def test_budget_checks_raise_with_details():
    budget = Budget(max_matchings=2)
    budget.check_matchings(2)
    with pytest.raises(BudgetExceededError) as excinfo:
        budget.check_matchings(3)
    assert (excinfo.value.budget, excinfo.value.limit, excinfo.value.requested) == (
        "max_matchings",
        2,
        3,
    )
