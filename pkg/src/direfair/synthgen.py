"""Synthetic election generation: dispersion-controlled random rankings and
random attribute partitions.

Rankings are drawn by sequential insertion: the i-th reference candidate is
inserted at position j (1-based from the front, j in [1, i]) with probability
phi^(i-j) normalized over j, which makes a ranking's probability proportional
to phi raised to its Kendall-tau distance from the reference. phi = 0 returns
the reference itself; phi = 1 is uniform over permutations.

Determinism contract: everything derives from ``random.Random`` (Mersenne
Twister) seeded with strings of the form "<seed>:<role>:<index>", so output is
independent of sampling order and stable across processes. The generator is
pinned; do not change it silently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .constraints import ConstraintSet, resolve_population_committees
from .core import Attribute, Election
from .rules import Rule


@dataclass(frozen=True)
class GenConfig:
    num_candidates: int
    num_voters: int
    committee_size: int
    candidate_attribute_count: int = 0
    voter_attribute_count: int = 0
    phi: float = 0.5
    reference: tuple[int, ...] | None = None  # None = random per seed
    seed: int = 0
    min_parts: int = 2

    def __post_init__(self):
        if not 1 <= self.committee_size <= self.num_candidates:
            raise ValueError("need 1 <= committee size <= number of candidates")
        if not 0.0 <= self.phi <= 1.0:
            raise ValueError("dispersion must lie in [0, 1]")
        if self.min_parts < 2:
            raise ValueError("attribute partitions need at least 2 parts")


def sample_mallows(m: int, phi: float, reference, rng: random.Random) -> tuple[int, ...]:
    """One ranking from the insertion model around the reference ranking."""
    if not 0.0 <= phi <= 1.0:
        raise ValueError("dispersion must lie in [0, 1]")
    reference = tuple(reference)
    if len(reference) != m:
        raise ValueError("reference ranking has the wrong length")
    result = []
    for i in range(1, m + 1):
        # weights phi^(i-j) for j = 1..i; phi = 0 forces j = i (append)
        weights = [phi ** (i - j) for j in range(1, i + 1)]
        total = sum(weights)
        r = rng.random() * total
        acc = 0.0
        pos = i - 1
        for j, w in enumerate(weights):
            acc += w
            if r < acc:
                pos = j
                break
        result.insert(pos, reference[i - 1])
    return tuple(result)


def random_partition(item_count: int, q_range: tuple[int, int],
                     rng: random.Random) -> list[list[int]]:
    """Split shuffled items into q non-empty contiguous runs, q uniform in
    q_range, cut positions uniform without replacement from [2, item_count]."""
    lo, hi = q_range
    if item_count < hi:
        raise ValueError(f"cannot cut {item_count} items into up to {hi} parts")
    q = rng.randint(lo, hi)
    items = list(range(item_count))
    rng.shuffle(items)
    cuts = sorted(rng.sample(range(2, item_count + 1), q - 1))
    starts = [1] + cuts + [item_count + 1]
    return [items[starts[i] - 1:starts[i + 1] - 1] for i in range(q)]


def _sub_rng(seed, *parts) -> random.Random:
    return random.Random(":".join([str(seed), *map(str, parts)]))


def generate_election(cfg: GenConfig) -> Election:
    """Deterministic synthetic election for the given config."""
    m, n, k = cfg.num_candidates, cfg.num_voters, cfg.committee_size
    if cfg.reference is not None:
        reference = tuple(cfg.reference)
    else:
        ref = list(range(m))
        _sub_rng(cfg.seed, "reference").shuffle(ref)
        reference = tuple(ref)
    rankings = [sample_mallows(m, cfg.phi, reference, _sub_rng(cfg.seed, "voter", v))
                for v in range(n)]

    q_range = (cfg.min_parts, min(k, m))
    candidate_attrs = []
    for a in range(cfg.candidate_attribute_count):
        parts = random_partition(m, q_range, _sub_rng(cfg.seed, "cattr", a))
        candidate_attrs.append(Attribute(
            f"cattr{a}", tuple((f"g{i}", frozenset(part)) for i, part in enumerate(parts))))
    voter_attrs = []
    for a in range(cfg.voter_attribute_count):
        parts = random_partition(n, (cfg.min_parts, min(k, n)), _sub_rng(cfg.seed, "vattr", a))
        voter_attrs.append(Attribute(
            f"vattr{a}", tuple((f"p{i}", frozenset(part)) for i, part in enumerate(parts))))
    return Election(m, rankings, tuple(candidate_attrs), tuple(voter_attrs))


def default_constraints(election: Election, k: int, rule: Rule = Rule.KBORDA,
                        literal_min_bound: bool = False) -> ConstraintSet:
    """Experiment-default bounds: one member per candidate group, and per
    population a share-proportional bound of max(1, floor(k * |P| / n))
    capped at k.

    ``literal_min_bound`` switches the representation bound to
    min(1, k * |P| / n) rounded down, for fidelity experiments with the
    published formula; the default follows the stated guarantee that every
    population keeps at least one member.
    """
    n = election.num_voters
    diversity = {key: 1 for key, _ in election.groups()}
    representation = {}
    for key, voters in election.populations():
        share = k * len(voters) // n
        if literal_min_bound:
            representation[key] = min(1, share)
        else:
            representation[key] = min(k, max(1, share))
    representation = {key: bound for key, bound in representation.items() if bound >= 1}
    cs = ConstraintSet(diversity, representation, {})
    return resolve_population_committees(election, cs, rule, k)
