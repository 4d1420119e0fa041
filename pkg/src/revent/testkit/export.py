"""Write every fixture to ``<dir>/<id>.json``.

Run as ``python3 -m revent.testkit.export [dir]`` (default ``fixtures``).
"""

from __future__ import annotations

import sys
from pathlib import Path

from revent.io import save
from revent.testkit.fixtures import all_fixtures


def export_fixtures(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fx in all_fixtures():
        path = out / f"{fx.id.value}.json"
        extra = {}
        if fx.printed:
            extra["printed"] = fx.printed
        if fx.notes:
            extra["notes"] = list(fx.notes)
        save(fx.structure, path, extra)
        written.append(path)
    return written


if __name__ == "__main__":
    for p in export_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
