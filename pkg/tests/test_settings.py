"""Tests for size caps and the packaged defaults."""

import copy

import pytest

from helix_lab.core.constants.defaults import DEFAULT_CHROMATIC_ORDER
from helix_lab.core.errors import InvalidParameterError
from helix_lab.core.settings import (
    load_caps,
    load_defaults,
    parse_caps,
    validate_defaults,
)
from helix_lab.harness.suites import SUITES

VALID_DEFAULTS = {
    "format_version": "1.0.0",
    "seed": 42,
    "trials": {"homb": 10},
    "suites": {"homb": {"k": [2]}},
}


@pytest.mark.unit
class TestCaps:
    """Tests for HELIX_CAPS parsing."""

    def test_parse(self):
        """Test comma-separated overrides with stray whitespace."""
        assert parse_caps("chromatic_order=5, family_order=60,") == {
            "chromatic_order": 5,
            "family_order": 60,
        }

    @pytest.mark.parametrize(
        "text", ["bogus=1", "chromatic_order", "chromatic_order=lots"]
    )
    def test_parse_errors(self, text):
        """Test unknown names, missing values and non-integers."""
        with pytest.raises(InvalidParameterError) as exc_info:
            parse_caps(text)
        assert exc_info.value.details["parameter"] == "HELIX_CAPS"

    def test_load_defaults_without_variable(self):
        """Test the built-in caps apply when nothing is set."""
        assert load_caps({}).chromatic_order == DEFAULT_CHROMATIC_ORDER

    def test_load_from_environment(self, monkeypatch):
        """Test the variable is read from the process environment."""
        monkeypatch.setenv("HELIX_CAPS", "local_order=7")
        assert load_caps().local_order == 7

    def test_invalid_value(self):
        """Test caps must be positive."""
        with pytest.raises(InvalidParameterError, match="invalid size caps"):
            load_caps({"HELIX_CAPS": "chromatic_order=0"})


@pytest.mark.unit
class TestDefaults:
    """Tests for the defaults file."""

    def test_packaged_file(self):
        """Test the packaged defaults cover every suite that takes parameters."""
        defaults = load_defaults()
        assert defaults.seed == 42
        assert defaults.trials_for("homb") == 100
        assert defaults.trials_for("dist") == 10
        assert set(defaults.suites) <= set(SUITES)
        assert defaults.parameters_for("cirhel-partial") == {
            "instance": "SH:6,2,2",
            "qcap": 3,
        }

    def test_parameters_are_copies(self):
        """Test callers cannot mutate the cached defaults."""
        load_defaults().parameters_for("circular")["max_r"] = 99
        assert load_defaults().parameters_for("circular")["max_r"] == 5

    def test_valid(self):
        """Test a minimal document validates."""
        defaults = validate_defaults(VALID_DEFAULTS)
        assert defaults.parameters_for("homb") == {"k": [2]}
        assert defaults.parameters_for("chrom") == {}

    @pytest.mark.parametrize(
        "path, value",
        [
            (("seed",), -1),
            (("trials", "homb"), -3),
            (("format_version",), "one"),
            (("suites", "homb"), [2]),
        ],
    )
    def test_schema_errors(self, path, value):
        """Test documents violating the schema are rejected."""
        data = copy.deepcopy(VALID_DEFAULTS)
        target = data
        for key in path[:-1]:
            target = target[key]
        target[path[-1]] = value
        with pytest.raises(InvalidParameterError) as exc_info:
            validate_defaults(data)
        assert exc_info.value.details["errors"]

    def test_unsupported_version(self):
        """Test versions outside the supported range."""
        data = {**VALID_DEFAULTS, "format_version": "2.1.0"}
        with pytest.raises(InvalidParameterError, match="unsupported"):
            validate_defaults(data)
