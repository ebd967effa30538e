"""Randomized verification campaigns: seeded rank-one perturbation trials
checked against every bound scenario, a small exhaustive completion
concordance sweep, and an out-of-hypothesis fault-injection probe.

Per-trial randomness derives from (seed, trial index), so results are
independent of execution order and reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import RankRelation, Scenario, check_bounds
from .builder import build_pencil, random_rank_one, random_weyr
from .concordance import concordance_mismatches
from .extractor import IrrationalSpectrumError, weyr_characteristic
from .pencils import Pencil, RankOneKind, classify_rank_one
from .randomness import make_rng


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 0
    trials: int = 1000
    size_budget: int = 6
    max_dim: int = 6
    kinds: tuple[RankOneKind, ...] = (RankOneKind.COLUMN, RankOneKind.ROW)
    concordance_weight: int = 3
    fault_injection: bool = False

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trial count must be >= 1")


def _trial_pencil(seed: int, trial: int, budget: int, max_dim: int) -> Pencil:
    """Deterministic trial pencil with both dimensions in 1..max_dim."""
    attempt = 0
    while True:
        omega = random_weyr(seed * 2_000_003 + trial * 1009 + attempt, budget)
        if 1 <= omega.m <= max_dim and 1 <= omega.n <= max_dim:
            return build_pencil(omega)
        attempt += 1


def perturbation_trial(config: CampaignConfig, trial: int) -> dict:
    """One seeded perturbation: returns observed data and any violations
    across the exact scenario and all coarser ones.

    Perturbations that push the spectrum off the rationals are redrawn
    (deterministically): the bounds hold for every rank-one perturbation,
    and the lab checks the outcomes it can represent exactly."""
    rng = make_rng("campaign", config.seed, trial)
    h = _trial_pencil(config.seed, trial, config.size_budget, config.max_dim)
    kind = rng.choice(config.kinds)
    before = weyr_characteristic(h)
    for attempt in range(10_000):
        p = random_rank_one(config.seed * 7_000_003 + trial + 4099 * attempt,
                            h.m, h.n, kind)
        try:
            after = weyr_characteristic(h.add(p))
            break
        except IrrationalSpectrumError:
            continue
    else:
        raise AssertionError("could not draw a rational-spectrum perturbation")
    observed_kind = classify_rank_one(p).kind
    gap = after.rank - before.rank
    relation = {0: RankRelation.EQUAL, -1: RankRelation.MINUS_ONE,
                1: RankRelation.PLUS_ONE}[gap]
    scenario = Scenario(observed_kind, relation)
    violations = []
    for sc in scenario.coarsenings():
        report = check_bounds(before, after, sc)
        for v in report.violations:
            violations.append({"scenario": sc.label(), **v.to_json()})
    return {
        "trial": trial,
        "pencil": h.to_json(),
        "perturbation": p.to_json(),
        "kind": observed_kind.value,
        "rank_relation": relation.value,
        "violations": violations,
    }


def fault_injection_trial(config: CampaignConfig, trial: int) -> dict:
    """Out-of-hypothesis probe: a rank-two perturbation checked against the
    rank-one intervals.  Violations are data, not failures."""
    h = _trial_pencil(config.seed, trial, config.size_budget, config.max_dim)
    before = weyr_characteristic(h)
    for attempt in range(10_000):
        p1 = random_rank_one(config.seed * 11_000_003 + trial + 7 * attempt,
                             h.m, h.n, RankOneKind.COLUMN)
        p2 = random_rank_one(config.seed * 13_000_007 + trial + 11 * attempt,
                             h.m, h.n, RankOneKind.ROW)
        p = p1.add(p2)
        try:
            after = weyr_characteristic(h.add(p))
            break
        except IrrationalSpectrumError:
            continue
    else:
        raise AssertionError("could not draw a rational-spectrum probe")
    gap = after.rank - before.rank
    count = 0
    if -1 <= gap <= 1:
        relation = {0: RankRelation.EQUAL, -1: RankRelation.MINUS_ONE,
                    1: RankRelation.PLUS_ONE}[gap]
        for sc in (Scenario(None, relation), Scenario(None, RankRelation.UNKNOWN)):
            count += len(check_bounds(before, after, sc).violations)
    else:
        count = -1  # rank moved by two: outside every scenario's hypotheses
    return {"trial": trial, "rank_gap": gap, "violations": count}


def run_campaign(config: CampaignConfig) -> dict:
    """Full campaign summary (deterministic for a fixed config)."""
    violations = 0
    counterexamples = []
    for trial in range(config.trials):
        outcome = perturbation_trial(config, trial)
        if outcome["violations"]:
            violations += len(outcome["violations"])
            if len(counterexamples) < 10:
                counterexamples.append(outcome)
    compared, mismatches = concordance_mismatches(config.concordance_weight)
    summary = {
        "config": {
            "seed": config.seed,
            "trials": config.trials,
            "size_budget": config.size_budget,
            "max_dim": config.max_dim,
            "kinds": [k.value for k in config.kinds],
            "concordance_weight": config.concordance_weight,
        },
        "perturbation": {"trials": config.trials, "violations": violations,
                         "counterexamples": counterexamples},
        "concordance": {"pairs": compared, "mismatches": len(mismatches)},
    }
    if config.fault_injection:
        probes = [fault_injection_trial(config, t) for t in range(min(config.trials, 50))]
        summary["fault_injection"] = {
            "probes": len(probes),
            "violating_probes": sum(1 for p in probes if p["violations"] != 0),
        }
    return summary
