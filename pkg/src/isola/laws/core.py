"""Law registry, bounds, seeded mutations and the suite runner."""

from __future__ import annotations

import fnmatch
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Sequence

from ..io import jsonable
from ..isolability import CheckReport

__all__ = [
    "Law",
    "LawResult",
    "SuiteReport",
    "Mutation",
    "UnknownLawError",
    "REGISTRY",
    "law",
    "get_law",
    "select",
    "load_bounds",
    "load_manifest",
    "run_law",
    "run_suite",
]

Checker = Callable[[dict, "Mutation | None"], CheckReport]


class UnknownLawError(KeyError):
    pass


@dataclass(frozen=True)
class Law:
    id: str
    module: str
    anchor: str
    checker: Checker
    mutable: bool = False


REGISTRY: dict[str, Law] = {}


def law(law_id: str, module: str, anchor: str, *, mutable: bool = False) -> Callable[[Checker], Checker]:
    """Register ``fn`` under ``law_id``; ``mutable`` marks laws that honour a mutation."""

    def deco(fn: Checker) -> Checker:
        if law_id in REGISTRY:
            raise ValueError(f"duplicate law id {law_id}")
        REGISTRY[law_id] = Law(law_id, module, anchor, fn, mutable)
        return fn

    return deco


def get_law(law_id: str) -> Law:
    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None


def select(pattern: str | None) -> list[Law]:
    """Laws matching a comma separated list of ids or shell-style globs.

    An empty pattern selects nothing. A term that matches no law is an error.
    """
    if not pattern:
        return []
    chosen: list[str] = []
    for term in (t.strip() for t in pattern.split(",")):
        if not term:
            continue
        hits = [i for i in REGISTRY if fnmatch.fnmatchcase(i, term)]
        if not hits:
            raise UnknownLawError(term)
        chosen.extend(h for h in hits if h not in chosen)
    order = list(REGISTRY)
    return [REGISTRY[i] for i in sorted(chosen, key=order.index)]


def _data_text(name: str) -> str:
    return resources.files("isola.data").joinpath(name).read_text(encoding="utf-8")


def load_bounds(path: str | Path | None = None) -> dict[str, dict]:
    """Default bounds, optionally overlaid with a JSON file of the same shape."""
    bounds = json.loads(_data_text("bounds.json"))
    if path is not None:
        extra = json.loads(Path(path).read_text(encoding="utf-8"))
        for key, val in extra.items():
            bounds[key] = {**bounds.get(key, {}), **val}
    return bounds


def load_manifest() -> list[dict]:
    return json.loads(_data_text("manifest.json"))["statements"]


class Mutation:
    """A deterministic corruption: one carrier of one law loses one element.

    Laws that support mutation call ``target`` to learn which carrier to
    corrupt and ``drop`` to remove the chosen element from it.
    """

    def __init__(self, seed: int):
        self.seed = seed

    def _rng(self, key: str) -> random.Random:
        return random.Random(f"{self.seed}/{key}")

    def target(self, options: Sequence[Any], key: str = "target") -> Any:
        return options[self._rng(key).randrange(len(options))]

    def drop(self, items: Sequence[Any], key: str = "drop") -> tuple:
        items = tuple(items)
        if not items:
            return items
        k = self._rng(key).randrange(len(items))
        return items[:k] + items[k + 1 :]


@dataclass
class LawResult:
    id: str
    module: str
    anchor: str
    bound: dict
    verdict: str
    runtime: float
    checked: int = 0
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "module": self.module,
            "anchor": self.anchor,
            "bound": self.bound,
            "verdict": self.verdict,
            "runtime": round(self.runtime, 3),
            "checked": self.checked,
            "witness": jsonable(self.witness),
        }


@dataclass
class SuiteReport:
    results: list[LawResult] = field(default_factory=list)
    mutation_seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.verdict == "pass" for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if r.verdict != "pass"]

    def to_json(self, *, timings: bool = True) -> dict:
        rows = [r.to_json() for r in self.results]
        if not timings:
            for row in rows:
                row.pop("runtime")
        return {
            "v": 1,
            "passed": self.passed,
            "mutation_seed": self.mutation_seed,
            "laws": rows,
        }

    def to_text(self) -> str:
        head = ("law", "verdict", "checked", "seconds", "bound")
        rows = [
            (r.id, r.verdict, str(r.checked), f"{r.runtime:.2f}", json.dumps(r.bound, separators=(",", ":")))
            for r in self.results
        ]
        widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(head)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*head), fmt.format(*("-" * w for w in widths))]
        lines += [fmt.format(*row) for row in rows]
        fails = self.failures()
        lines.append(f"{len(self.results) - len(fails)} passed, {len(fails)} failed")
        for r in fails:
            lines.append(f"{r.id}: {json.dumps(jsonable(r.witness), separators=(',', ':'))}")
        return "\n".join(lines) + "\n"


def run_law(law_id: str, bound: dict, mutation_seed: int | None = None) -> LawResult:
    lw = get_law(law_id)
    mut = Mutation(mutation_seed) if mutation_seed is not None else None
    start = time.perf_counter()
    try:
        rep = lw.checker(dict(bound), mut)
        verdict = "pass" if rep.passed else "fail"
        checked, witness = rep.checked, rep.witness
    except Exception as exc:  # a crashing checker is reported, not raised
        verdict, checked, witness = "error", 0, f"{type(exc).__name__}: {exc}"
    return LawResult(lw.id, lw.module, lw.anchor, dict(bound), verdict, time.perf_counter() - start, checked, witness)


def run_suite(
    pattern: str | None = "*",
    bounds: dict[str, dict] | None = None,
    *,
    mutation_seed: int | None = None,
    jobs: int = 1,
) -> SuiteReport:
    """Run every law matching ``pattern``.

    ``bounds`` overrides the defaults per law id (keys are merged). With
    ``mutation_seed`` set, laws that support it run against a corrupted
    carrier and are expected to fail.
    """
    laws = select(pattern)
    base = load_bounds()
    for key, val in (bounds or {}).items():
        base[key] = {**base.get(key, {}), **val}
    jobs_list = [(lw.id, base.get(lw.id, {})) for lw in laws]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_law, i, b, mutation_seed) for i, b in jobs_list]
            results = [f.result() for f in futures]
    else:
        results = [run_law(i, b, mutation_seed) for i, b in jobs_list]
    return SuiteReport(results, mutation_seed)
