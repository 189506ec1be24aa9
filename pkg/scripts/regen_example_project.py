#!/usr/bin/env python3
"""Rewrite the bundled example project JSON from its code form.

Run after touching depra.case_study so the packaged file stays identical
to what example_project() builds. Round-trips the file once as a sanity
check before accepting it.
"""

from __future__ import annotations

import sys
from pathlib import Path

from depra.case_study import DEFAULT_PROJECT_BASENAME, example_project
from depra.project_io import load_project, save_project


def main() -> int:
    target = Path(__file__).resolve().parents[1] / "src" / "depra" / "data"
    target.mkdir(parents=True, exist_ok=True)
    path = target / DEFAULT_PROJECT_BASENAME
    project = example_project()
    save_project(project, path)
    if load_project(path) != project:
        print("round-trip mismatch, file NOT safe to ship", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
