"""Planner selection and the plan/verify/cross-check loop used by ``check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coloring_model import Instance, Plan, check_plan, replay, stitch
from .errors import BudgetExceeded, PlannerInapplicable, RecolorError
from .generators import gen_instance, gen_multipartite, gen_subcubic, part_profiles
from .graph_core import detect_multipartite, matching_number
from .oracle import bfs_distance, oracle_plan
from .planner_multipartite import plan_multipartite_result
from .planner_subcubic import plan_subcubic_result
from .planning import PlanResult, audit

PLANNERS = ("auto", "subcubic", "multipartite", "oracle")


def pick_planner(inst: Instance) -> str:
    if detect_multipartite(inst.graph) is not None:
        return "multipartite"
    if inst.graph.max_degree() <= 3:
        return "subcubic"
    return "oracle"


def make_plan(inst: Instance, planner: str = "auto",
              budget: int | None = None) -> tuple[str, Plan, PlanResult | None]:
    """Returns (planner used, plan, level record or None for the oracle)."""
    if planner not in PLANNERS:
        raise ValueError(f"unknown planner {planner!r}")
    if planner == "auto":
        planner = pick_planner(inst)
    if planner == "subcubic":
        res = plan_subcubic_result(inst)
        return planner, res.plan, res
    if planner == "multipartite":
        res = plan_multipartite_result(inst)
        return planner, res.plan, res
    return planner, oracle_plan(inst, budget), None


@dataclass
class Trial:
    label: str
    instance: Instance
    planner: str = ""
    length: int | None = None
    bound: int | None = None
    distance: int | None = None
    kinds: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def run_trial(inst: Instance, label: str = "", planner: str = "auto",
              budget: int | None = None, with_oracle: bool = True) -> Trial:
    """Plan, replay, audit and (optionally) compare with the exact distance.

    Never raises for planner or replay failures; they land in ``error``.
    A budget refusal from the oracle is reported but is not a failure.
    """
    t = Trial(label, inst, bound=inst.n + matching_number(inst.graph))
    try:
        t.planner, plan, res = make_plan(inst, planner, budget)
        check_plan(plan, inst)
        walk = stitch(plan, inst)
        if replay(inst.graph, inst.lists, inst.alpha, walk)[-1] != inst.beta:
            raise RecolorError("stitched walk does not end at beta")
        t.length = len(plan)
        if res is not None:
            audit(res)
            t.kinds = [lv.kind for lv in res.levels]
        if t.length > t.bound:
            raise RecolorError(f"length {t.length} exceeds n + mu = {t.bound}")
        if with_oracle:
            try:
                t.distance = bfs_distance(inst, budget)
            except BudgetExceeded:
                t.distance = None
            if t.distance is not None and t.length < t.distance:
                raise RecolorError(f"length {t.length} below the exact distance {t.distance}")
    except PlannerInapplicable as exc:
        t.error = f"inapplicable: {exc}"
    except (RecolorError, ValueError) as exc:
        t.error = f"{type(exc).__name__}: {exc}"
    return t


def random_instances(max_n: int, trials: int, seed: int,
                     kind: str = "both") -> list[tuple[str, str, Instance]]:
    """Seeded (label, family, instance) corpus alternating subcubic and
    multipartite graphs."""
    rng = random.Random(seed)
    profiles = part_profiles(max_n)
    kinds = {"both": ("subcubic", "multipartite"), "subcubic": ("subcubic",),
             "multipartite": ("multipartite",)}[kind]
    out = []
    for i in range(trials):
        k = kinds[i % len(kinds)]
        s = rng.randrange(2**31)
        extra = rng.randint(0, 1)
        if k == "subcubic":
            n = rng.randint(1, max_n)
            g = gen_subcubic(n, s, keep=rng.choice((1.0, 0.8)))
            label = f"subcubic n={n} seed={s}"
        else:
            parts = profiles[rng.randrange(len(profiles))]
            g = gen_multipartite(parts, s)
            label = f"multipartite parts={parts} seed={s}"
        out.append((label, k, gen_instance(g, s, extra=extra)))
    return out
