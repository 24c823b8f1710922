"""Write the built-in scenario and intervention patch documents to disk.

The files round-trip through the package's canonical JSON form, so they
serve as starting points for hand-edited what-if scenarios fed back in
through the CLI or the HTTP service.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from microresil import builtin_new_england
from microresil.interventions import builtin_patches
from microresil.scenario_io import serialize_patch, serialize_scenario


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out_dir", type=Path, nargs="?", default=Path("documents"))
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    scenario_path = args.out_dir / "new_england.json"
    scenario_path.write_bytes(serialize_scenario(builtin_new_england()))
    print(f"wrote {scenario_path}")
    for patch in builtin_patches():
        path = args.out_dir / f"{patch.name.replace('-', '_')}.json"
        path.write_bytes(serialize_patch(patch))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
