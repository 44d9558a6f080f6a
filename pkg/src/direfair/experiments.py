"""Sweep harness: utility ratios, envy proportions, and scope comparisons
over generated elections.

Each sweep point generates fresh instances, solves the constrained optimum,
searches for an envy-free committee, and records exact-rational metrics.
Instances are independent and fully determined by (seed, point, instance), so
runs are reproducible and order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .constraints import enumerate_dire, solve_drcwd
from .core import Committee, Election
from .envyfree import FEC, UEC, WEC, Scope, check_envyfree, find_envyfree_dire
from .rules import Rule, committee_score
from .synthgen import GenConfig, default_constraints, generate_election


@dataclass(frozen=True)
class ExperimentConfig:
    sweep: str  # "pi" | "phi" | "bound"
    values: tuple
    base: GenConfig
    rule: Rule = Rule.KBORDA
    notion_kind: str = "fec"  # fec | uec | wec
    bound: Fraction = Fraction(0)  # fixed bound for pi/phi sweeps
    scope: Scope = Scope.GLOBAL
    instances: int = 5
    seed: int = 0
    track_min_envious: bool = True

    def __post_init__(self):
        if self.sweep not in ("pi", "phi", "bound"):
            raise ValueError(f"unknown sweep variable {self.sweep!r}")
        if not self.values:
            raise ValueError("sweep needs at least one value")
        if self.instances < 1:
            raise ValueError("need at least one instance per point")


@dataclass(frozen=True)
class InstanceRow:
    value: object
    instance: int
    feasible: bool
    envyfree_exists: bool
    envyfree_score: int | None
    dire_score: int | None
    utility_ratio: Fraction | None
    proportion_envious: Fraction | None
    simpsons_flag: bool


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    rows: tuple[InstanceRow, ...]

    def point_means(self):
        """Per sweep value: mean ratio and mean envy proportion over the
        instances where they are defined."""
        out = {}
        for value in self.config.values:
            rows = [r for r in self.rows if r.value == value]
            ratios = [r.utility_ratio for r in rows if r.utility_ratio is not None]
            envy = [r.proportion_envious for r in rows if r.proportion_envious is not None]
            out[value] = {
                "mean_ratio": sum(ratios, Fraction(0)) / len(ratios) if ratios else None,
                "mean_envious": sum(envy, Fraction(0)) / len(envy) if envy else None,
                "feasible": sum(1 for r in rows if r.feasible),
                "envyfree": sum(1 for r in rows if r.envyfree_exists),
                "simpsons": sum(1 for r in rows if r.simpsons_flag),
            }
        return out


@dataclass(frozen=True)
class SimpsonsReport:
    applicable: bool
    global_exists: bool | None = None
    intersectional_exists: bool | None = None

    @property
    def global_fail_intersectional_pass(self) -> bool:
        return self.applicable and not self.global_exists and bool(self.intersectional_exists)

    @property
    def intersectional_fail_global_pass(self) -> bool:
        return self.applicable and bool(self.global_exists) and not self.intersectional_exists


def utility_ratio(envyfree: Committee, dire_opt: Committee, election: Election,
                  rule: Rule) -> Fraction | None:
    """Score ratio of the envy-free committee to the constrained optimum;
    None when the optimum scores zero."""
    top = committee_score(election, dire_opt.members, rule)
    if top == 0:
        return None
    return Fraction(committee_score(election, envyfree.members, rule), top)


def proportion_envious(election: Election, cs, members, notion,
                       scope: Scope = Scope.GLOBAL, rule: Rule = Rule.KBORDA) -> Fraction:
    """Fraction of scoped populations envious of at least one other."""
    report = check_envyfree(election, cs, members, notion, scope, rule)
    return report.proportion_envious


def min_proportion_envious(election: Election, cs, k, notion,
                           scope: Scope = Scope.GLOBAL,
                           rule: Rule = Rule.KBORDA) -> Fraction | None:
    """Smallest envy proportion achievable by any feasible committee
    (the share of populations that always remain envious)."""
    best = None
    for members in enumerate_dire(election, cs, k):
        p = proportion_envious(election, cs, members, notion, scope, rule)
        if best is None or p < best:
            best = p
        if best == 0:
            break
    return best


def detect_simpsons(election: Election, cs, rule: Rule, k: int, notion) -> SimpsonsReport:
    """Compare envy-free existence under the global and inter-sectional scopes."""
    if len(election.voter_attributes) < 2:
        return SimpsonsReport(False)
    global_found = find_envyfree_dire(election, cs, rule, k, notion, Scope.GLOBAL)
    inter_found = find_envyfree_dire(election, cs, rule, k, notion, Scope.INTERSECTIONAL)
    return SimpsonsReport(True, global_found is not None, inter_found is not None)


def make_notion(kind: str, bound):
    kind = kind.lower()
    if kind == "fec":
        return FEC(int(bound))
    if kind == "uec":
        return UEC(int(bound))
    if kind == "wec":
        return WEC(Fraction(bound))
    raise ValueError(f"unknown notion {kind!r}")


def _instance_config(cfg: ExperimentConfig, value, index: int) -> tuple[GenConfig, object]:
    if cfg.sweep == "bound":
        # same instance across bound values, so per-instance comparisons pair up
        seed = f"{cfg.seed}:bound:{index}"
        return replace(cfg.base, seed=seed), make_notion(cfg.notion_kind, value)
    seed = f"{cfg.seed}:{cfg.sweep}:{value}:{index}"
    base = replace(cfg.base, seed=seed)
    if cfg.sweep == "pi":
        return replace(base, voter_attribute_count=int(value)), make_notion(cfg.notion_kind, cfg.bound)
    return replace(base, phi=float(value)), make_notion(cfg.notion_kind, cfg.bound)


def run_instance(cfg: ExperimentConfig, value, index: int) -> InstanceRow:
    gen, notion = _instance_config(cfg, value, index)
    election = generate_election(gen)
    k = gen.committee_size
    cs = default_constraints(election, k, cfg.rule)
    dire = solve_drcwd(election, cs, cfg.rule, k)
    if dire is None:
        return InstanceRow(value, index, False, False, None, None, None, None, False)
    ef = find_envyfree_dire(election, cs, cfg.rule, k, notion, cfg.scope)
    ratio = utility_ratio(ef, dire, election, cfg.rule) if ef else None
    if cfg.track_min_envious:
        envy = min_proportion_envious(election, cs, k, notion, cfg.scope, cfg.rule)
    else:
        envy = proportion_envious(election, cs, dire.members, notion, cfg.scope, cfg.rule)
    simpsons = False
    if len(election.voter_attributes) >= 2:
        report = detect_simpsons(election, cs, cfg.rule, k, notion)
        simpsons = report.global_fail_intersectional_pass
    return InstanceRow(value, index, True, ef is not None,
                       ef.score if ef else None, dire.score, ratio, envy, simpsons)


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    rows = [run_instance(cfg, value, index)
            for value in cfg.values
            for index in range(cfg.instances)]
    return ExperimentResult(cfg, tuple(rows))
