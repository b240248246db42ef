"""Tests for the development setup script and the dependency manifests."""

import re
from pathlib import Path
from unittest.mock import patch

import pytest

import setup_dev

ROOT = Path(__file__).resolve().parent.parent


def _requirement_names() -> set:
    names = set()
    for line in (ROOT / "requirements.txt").read_text(encoding="utf-8").splitlines():
        line = line.split("#")[0].strip()
        if line:
            names.add(re.split(r"[<>=!~\[ ]", line, maxsplit=1)[0].lower())
    return names


def _poetry_names(section: str) -> set:
    text = (ROOT / "pyproject.toml").read_text(encoding="utf-8")
    body = text.split(f"[{section}]", 1)[1].split("\n[", 1)[0]
    return {
        match.group(1).lower()
        for match in re.finditer(r"^([A-Za-z0-9_.-]+)\s*=", body, re.MULTILINE)
        if match.group(1) != "python"
    }


@pytest.mark.unit
class TestManifests:
    """Tests that requirements.txt mirrors pyproject.toml."""

    def test_same_packages(self):
        """Test runtime and dev dependencies appear in both manifests."""
        declared = _poetry_names("tool.poetry.dependencies") | _poetry_names(
            "tool.poetry.group.dev.dependencies"
        )
        assert {"flake8-bugbear", "flake8-docstrings", "networkx"} <= declared
        assert _requirement_names() == declared


@pytest.mark.unit
class TestSetupDev:
    """Tests for setup_dev.py."""

    def test_check_configuration(self, capsys):
        """Test the packaged defaults and built-in caps pass the check."""
        assert setup_dev.check_configuration() == 0
        out = capsys.readouterr().out
        assert "defaults.json 1.0.0:" in out
        assert "size caps from built-in defaults" in out

    def test_caps_from_environment(self, monkeypatch, capsys):
        """Test HELIX_CAPS is reported as the source of the caps."""
        monkeypatch.setenv("HELIX_CAPS", "local_order=7")
        assert setup_dev.check_configuration() == 0
        out = capsys.readouterr().out
        assert "size caps from HELIX_CAPS" in out
        assert "'local_order': 7" in out

    def test_bad_caps(self, monkeypatch, capsys):
        """Test a malformed HELIX_CAPS fails the check."""
        monkeypatch.setenv("HELIX_CAPS", "chromatic_order=0")
        assert setup_dev.check_configuration() == 1
        assert "configuration check failed" in capsys.readouterr().out

    def test_install_steps(self):
        """Test requirements are installed before the editable package."""
        with patch("setup_dev.subprocess.check_call") as check_call:
            assert setup_dev.main([]) == 0
        commands = [call.args[0][3:] for call in check_call.call_args_list]
        assert commands == [
            ["install", "-r", str(ROOT / "requirements.txt")],
            ["install", "-e", str(ROOT)],
        ]

    def test_check_only(self):
        """Test --check-only skips pip."""
        with patch("setup_dev.subprocess.check_call") as check_call:
            assert setup_dev.main(["--check-only"]) == 0
        check_call.assert_not_called()
