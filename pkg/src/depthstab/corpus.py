"""Seeded instance corpus: balanced families plus unbalanced controls."""
from __future__ import annotations

import json
import random
from pathlib import Path

from .hypergraph import Hypergraph, generate, is_balanced, parse

DEFAULT_SEED = 20240601


def balanced_corpus(seed: int = DEFAULT_SEED) -> list[tuple[str, Hypergraph]]:
    rng = random.Random(seed)
    out: list[tuple[str, Hypergraph]] = []
    seen: set = set()

    def add(name: str, h: Hypergraph):
        if h.key() in seen or not h.edges:
            return
        seen.add(h.key())
        out.append((name, h))

    for n in range(2, 9):
        add(f"path_n{n}", generate("path", n=n))
    for n in (4, 6, 8):
        add(f"even_cycle_n{n}", generate("even_cycle", n=n))
    for n in range(3, 9):
        for rep in range(2):
            s = rng.randrange(1 << 30)
            add(f"tree_n{n}_s{s}", generate("tree", seed=s, n=n))
    shapes = [(1, 2), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4), (2, 5), (3, 5), (2, 6)]
    for left, right in shapes:
        for density in (0.4, 0.6):
            s = rng.randrange(1 << 30)
            add(f"bipartite_{left}x{right}_d{density}_s{s}",
                generate("bipartite", seed=s, left=left, right=right, density=density))
    add("bipartite_K22", generate("bipartite", seed=7, left=2, right=2, density=1.0))
    for n in range(4, 9):
        for rep in range(2):
            s = rng.randrange(1 << 30)
            add(f"interval_n{n}_s{s}", generate("interval", seed=s, n=n, m=max(2, n - 2)))
    for name, h in out:
        if not is_balanced(h):
            raise AssertionError(f"corpus instance {name} is not balanced")
    return out


def control_corpus() -> list[tuple[str, Hypergraph]]:
    return [
        ("odd_cycle_n3", generate("odd_cycle", n=3)),
        ("odd_cycle_n5", generate("odd_cycle", n=5)),
        ("triangle_plus_edge", Hypergraph.from_edges(3, [(1, 2), (2, 3), (1, 3), (1, 2, 3)])),
    ]


def write_corpus(directory: str | Path, seed: int = DEFAULT_SEED) -> Path:
    """One JSON file per instance plus manifest.json with expected verdicts."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    manifest = {"seed": seed, "instances": []}
    for kind, items in (("balanced", balanced_corpus(seed)), ("control", control_corpus())):
        for name, h in items:
            (d / f"{name}.json").write_text(h.to_json() + "\n", encoding="utf-8")
            expected = (
                {"balanced": True, "t1_nonincreasing": True, "t2_dstab_le_n": True,
                 "limit_matches": True, "ntf_holds": True}
                if kind == "balanced"
                else {"balanced": False, "ntf_holds": False}
            )
            manifest["instances"].append({"name": name, "file": f"{name}.json", "expected": expected})
    (d / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return d


def load_corpus(directory: str | Path) -> list[tuple[str, Hypergraph, dict]]:
    d = Path(directory)
    manifest = json.loads((d / "manifest.json").read_text(encoding="utf-8"))
    return [
        (e["name"], parse((d / e["file"]).read_text(encoding="utf-8")), e["expected"])
        for e in manifest["instances"]
    ]
