"""CLI invocations whose outputs are frozen under tests/golden."""

from __future__ import annotations

from pathlib import Path

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

CURVES = ("m3", "m7", "stability_example")


def _cases() -> dict[str, list[str]]:
    cases: dict[str, list[str]] = {}
    for name in CURVES:
        spec = str(DATA / f"{name}.json")
        cases[f"analyze_{name}.txt"] = ["analyze", spec]
        cases[f"analyze_{name}.json"] = ["analyze", spec, "--format", "json"]
        cases[f"sweep_{name}.csv"] = ["sweep", spec, "--lambda-range", "0.05:0.95:19"]
        cases[f"stability_{name}.txt"] = ["stability", spec]
    for n in (1, 3, 5):
        cases[f"family_{n}.txt"] = ["family", str(n)]
    cases["render_m3.svg"] = ["render", str(DATA / "m3.json"), "--lambda", "0.5"]
    cases["render_m7.svg"] = ["render", str(DATA / "m7.json"), "--lambda", "0.5"]
    cases["render_stability_example.svg"] = [
        "render", str(DATA / "stability_example.json"), "--lambda", "0.5", "--wigner-type",
    ]
    return cases


CASES = _cases()
# oval + caustic, plus the dashed W curve when requested
SVG_PATHS = {"render_m3.svg": 2, "render_m7.svg": 2, "render_stability_example.svg": 3}


def produce(name: str, out_dir: Path) -> Path:
    from ovalkit.cli import main

    target = out_dir / name
    code = main(CASES[name] + ["--samples", "4096", "--out", str(target)])
    if code != 0:
        raise RuntimeError(f"{name}: exit {code}")
    return target
