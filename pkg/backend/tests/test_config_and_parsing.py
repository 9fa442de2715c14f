from __future__ import annotations

import pytest
from pydantic import ValidationError

from wilfkit.config import Settings, get_settings
from wilfkit.errors import EmptyInput, InvalidInput
from wilfkit.schemas import RunConfig
from wilfkit.utils.parsing import parse_generators, parse_range


def test_settings_defaults():
    settings = get_settings()

    assert settings.default_jobs == 1
    assert settings.node_limit == 10**8
    assert settings.output_format == "human"
    assert settings.apery_vector_threshold == 512


def test_settings_from_environment(override_settings):
    settings = override_settings(output_format="JSONL", default_jobs=3, log_level="debug")

    assert settings.output_format == "jsonl"
    assert settings.default_jobs == 3
    assert settings.log_level == "DEBUG"


def test_settings_reject_non_positive_values():
    with pytest.raises(ValidationError):
        Settings(split_factor=0)


def test_parse_generators_ignores_whitespace():
    assert parse_generators(" 7, 8 ,10,\t19 ") == [7, 8, 10, 19]


@pytest.mark.parametrize("raw, error", [("", EmptyInput), ("  ", EmptyInput), ("7,,8", InvalidInput), ("7,a", InvalidInput)])
def test_parse_generators_errors(raw, error):
    with pytest.raises(error):
        parse_generators(raw)


@pytest.mark.parametrize("raw, expected", [("3", (3, 3)), ("1..4", (1, 4)), (" 2 .. 9 ", (2, 9))])
def test_parse_range(raw, expected):
    assert parse_range(raw) == expected


@pytest.mark.parametrize("raw", ["4..1", "a..b", "1-4"])
def test_parse_range_errors(raw):
    with pytest.raises(InvalidInput):
        parse_range(raw)


def test_run_config_splits_checker_selection():
    assert RunConfig(command="verify", max_genus=3, checkers="god, fail,").checkers == ["GOD", "FAIL"]


def test_run_config_requires_the_command_input():
    with pytest.raises(ValidationError):
        RunConfig(command="wilf", max_genus=3)
    with pytest.raises(ValidationError):
        RunConfig(command="verify", max_genus=3, jobs=0)

    config = RunConfig(command="verify", max_genus=3, checkers="god,fail")
    assert config.checkers == ["GOD", "FAIL"]
