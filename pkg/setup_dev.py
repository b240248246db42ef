#!/usr/bin/env python3
"""Prepare a development checkout of helix-lab.

Installs the package in editable mode together with ``requirements.txt``
(which carries the test-only networkx oracle), then checks that the packaged
``config/defaults.json`` loads and that ``HELIX_CAPS``, when set, parses.
"""

import argparse
import os
import subprocess
import sys
from pathlib import Path
from typing import List, Optional

ROOT = Path(__file__).resolve().parent


def pip_install(*args: str) -> None:
    subprocess.check_call([sys.executable, "-m", "pip", "install", *args])


def install() -> None:
    print("Installing helix-lab in editable mode with development requirements...")
    pip_install("-r", str(ROOT / "requirements.txt"))
    pip_install("-e", str(ROOT))


def check_configuration() -> int:
    """Load the packaged defaults and the size caps; 0 when both are usable."""
    from helix_lab.core.constants import CAPS_ENV_VAR
    from helix_lab.core.errors import HelixError
    from helix_lab.core.settings import load_caps, load_defaults
    from helix_lab.harness.suites import SUITES

    try:
        defaults = load_defaults()
        caps = load_caps()
    except HelixError as exc:
        print(f"configuration check failed: {exc.message}")
        return 1
    unknown = sorted(set(defaults.suites) - set(SUITES))
    if unknown:
        print(f"defaults.json names unknown suites: {', '.join(unknown)}")
        return 1
    print(
        f"defaults.json {defaults.format_version}: {len(defaults.suites)} suites, "
        f"seed {defaults.seed}"
    )
    source = CAPS_ENV_VAR if os.environ.get(CAPS_ENV_VAR) else "built-in defaults"
    print(f"size caps from {source}: {caps.model_dump()}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--check-only",
        action="store_true",
        help="Skip the install and only check the configuration",
    )
    args = parser.parse_args(argv)
    if not args.check_only:
        try:
            install()
        except subprocess.CalledProcessError as e:
            print(f"Install failed: {e}")
            return 1
    return check_configuration()


if __name__ == "__main__":
    sys.exit(main())
