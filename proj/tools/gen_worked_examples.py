#!/usr/bin/env python3
"""Regenerate src/worked_examples.inc from tests/data and tests/golden.

The `examples` verification suite carries its reference fans and chart
presentations embedded in the library so that suite runs need no file
access.  The same bytes are frozen as golden files for the CLI tests;
this script keeps the two in sync (run it after changing either side).
"""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
GOLD = ROOT / "tests" / "golden"
OUT = ROOT / "src" / "worked_examples.inc"

EXAMPLES = [
    ("moyal_plane", [0]),
    ("projective_plane", [0, 1, 2, 3]),
    ("quadric_cone", [0]),
    ("quadric_cone_resolved", [0, 1, 3]),
    ("conifold", [0]),
    ("conifold_resolved", [0, 1, 3]),
]


def raw(tag: str, text: str) -> str:
    marker = f"){tag}\""
    if marker in text:
        raise SystemExit(f"raw-string delimiter {tag} collides with content")
    return f'R"{tag}({text}){tag}"'


def main() -> None:
    parts = [
        "// Generated by tools/gen_worked_examples.py from tests/data and",
        "// tests/golden.  Do not edit by hand; rerun the script instead.",
        "",
        "static std::vector<WorkedExample> worked_examples_data() {",
        "  std::vector<WorkedExample> xs;",
    ]
    for name, cones in EXAMPLES:
        fan = (DATA / f"{name}.json").read_text()
        parts.append("  {")
        parts.append("    WorkedExample e;")
        parts.append(f'    e.name = "{name}";')
        parts.append(f"    e.fan_json = {raw('qj', fan)};")
        for cid in cones:
            chart = (GOLD / f"{name}_cone{cid}.txt").read_text()
            parts.append(f"    e.charts.emplace_back({cid}, {raw('qg', chart)});")
        parts.append("    xs.push_back(std::move(e));")
        parts.append("  }")
    parts.append("  return xs;")
    parts.append("}")
    OUT.write_text("\n".join(parts) + "\n")
    print(f"wrote {OUT} ({len(EXAMPLES)} examples)")


if __name__ == "__main__":
    main()
