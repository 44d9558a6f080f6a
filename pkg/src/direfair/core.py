"""Election data model: candidates, voters, rankings, attribute partitions.

Candidate and voter ids are dense integers 0..m-1 and 0..n-1. Group and
population labels are strings; a group/population is addressed by the pair
(attribute name, label). Elections are immutable after construction and all
derived quantities are cached, so concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels


@dataclass(frozen=True)
class Attribute:
    """A named partition of candidates or voters into disjoint labeled parts."""

    name: str
    parts: tuple[tuple[str, frozenset[int]], ...]

    def labels(self):
        return [label for label, _ in self.parts]

    def members(self, label: str) -> frozenset[int]:
        for part_label, ids in self.parts:
            if part_label == label:
                return ids
        raise KeyError(f"attribute {self.name!r} has no part {label!r}")


@dataclass(frozen=True)
class Committee:
    """A k-sized candidate subset with its score under some rule."""

    members: frozenset[int]
    score: int

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class PopulationProfile:
    """A voter population's collective view: aggregate ranking and committee."""

    key: tuple[str, str]
    voters: tuple[int, ...]
    aggregate_ranking: tuple[int, ...]
    winning_committee: frozenset[int]

    @cached_property
    def rank_of(self) -> dict[int, int]:
        """1-based position of each candidate in the aggregate ranking."""
        return {c: i + 1 for i, c in enumerate(self.aggregate_ranking)}


class Election:
    """An election with complete strict rankings and attribute partitions."""

    def __init__(self, num_candidates, rankings, candidate_attributes=(),
                 voter_attributes=()):
        self.num_candidates = int(num_candidates)
        self.rankings = tuple(tuple(r) for r in rankings)
        self.candidate_attributes = tuple(candidate_attributes)
        self.voter_attributes = tuple(voter_attributes)

    @property
    def num_voters(self) -> int:
        return len(self.rankings)

    @cached_property
    def positions(self) -> np.ndarray:
        """(n, m) matrix of 0-based positions; positions[v, c] = rank of c."""
        m = self.num_candidates
        pos = np.empty((self.num_voters, m), dtype=np.int64)
        for v, ranking in enumerate(self.rankings):
            for i, c in enumerate(ranking):
                pos[v, c] = i
        return pos

    @cached_property
    def candidate_borda_totals(self) -> np.ndarray:
        """Per-candidate sum over all voters of the Borda score m - 1 - pos."""
        m = self.num_candidates
        return (m - 1 - self.positions).sum(axis=0)

    def groups(self):
        """All (key, member set) candidate groups across attributes."""
        for attr in self.candidate_attributes:
            for label, ids in attr.parts:
                yield (attr.name, label), ids

    def populations(self):
        """All (key, member set) voter populations across attributes."""
        for attr in self.voter_attributes:
            for label, ids in attr.parts:
                yield (attr.name, label), ids

    def group_members(self, key) -> frozenset[int]:
        attr_name, label = key
        for attr in self.candidate_attributes:
            if attr.name == attr_name:
                return attr.members(label)
        raise KeyError(f"no candidate attribute {attr_name!r}")

    def population_members(self, key) -> frozenset[int]:
        attr_name, label = key
        for attr in self.voter_attributes:
            if attr.name == attr_name:
                return attr.members(label)
        raise KeyError(f"no voter attribute {attr_name!r}")


def validate_election(election: Election) -> list[str]:
    """Collect invariant violations; an empty list means the election is valid.

    Attributes are allowed to leave some items ungrouped; that produces no
    violation (only disjointness and non-emptiness are required).
    """
    problems = []
    m = election.num_candidates
    n = election.num_voters
    if m < 1:
        problems.append("no candidates")
    if n < 1:
        problems.append("no voters")
    full = frozenset(range(m))
    for v, ranking in enumerate(election.rankings):
        if frozenset(ranking) != full or len(ranking) != m:
            problems.append(f"voter {v}: incomplete ranking or invalid ids")
    for attr in election.candidate_attributes:
        problems.extend(_check_partition(attr, m, "group", "candidate"))
    for attr in election.voter_attributes:
        problems.extend(_check_partition(attr, n, "population", "voter"))
    return problems


def _check_partition(attr, universe_size, part_kind, item_kind):
    problems = []
    seen = set()
    for label, ids in attr.parts:
        if not ids:
            problems.append(f"attribute {attr.name!r}: empty {part_kind} {label!r}")
        bad = [i for i in ids if not 0 <= i < universe_size]
        if bad:
            problems.append(
                f"attribute {attr.name!r}/{label!r}: unknown {item_kind} ids {sorted(bad)}")
        overlap = seen & ids
        if overlap:
            problems.append(
                f"attribute {attr.name!r}: non-disjoint {part_kind}s "
                f"(items {sorted(overlap)} appear twice)")
        seen |= ids
    return problems


def position_of(election: Election, voter: int, candidate: int) -> int:
    """1-based position of a candidate in one voter's ranking."""
    if not 0 <= voter < election.num_voters:
        raise KeyError(f"unknown voter id {voter}")
    if not 0 <= candidate < election.num_candidates:
        raise KeyError(f"unknown candidate id {candidate}")
    return int(election.positions[voter, candidate]) + 1


def borda_vector(ranking) -> dict[int, int]:
    """Map each candidate to its Borda score m - i for 1-based position i."""
    ranking = tuple(ranking)
    m = len(ranking)
    if frozenset(ranking) != frozenset(range(m)):
        raise ValueError("ranking is not a permutation of 0..m-1")
    return {c: m - 1 - i for i, c in enumerate(ranking)}


def aggregate_population_ranking(election: Election, voters) -> tuple[int, ...]:
    """Order candidates by descending Borda-score sum over the given voters.

    Ties break by ascending candidate id (the pre-decided priority order).
    """
    voters = sorted(voters)
    if not voters:
        raise ValueError("cannot aggregate an empty population")
    m = election.num_candidates
    totals = (m - 1 - election.positions[voters, :]).sum(axis=0)
    return tuple(sorted(range(m), key=lambda c: (-int(totals[c]), c)))


def population_winning_committee(election: Election, voters, rule, k: int) -> Committee:
    """The population's own winning committee from its members' rankings."""
    from .rules import Rule  # local import to avoid a cycle

    m = election.num_candidates
    if not 1 <= k <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    voters = sorted(voters)
    if rule is Rule.KBORDA:
        ranking = aggregate_population_ranking(election, voters)
        members = frozenset(ranking[:k])
        totals = (m - 1 - election.positions[voters, :]).sum(axis=0)
        return Committee(members, int(sum(totals[c] for c in members)))
    score, members = kernels.betacc_best_committee(election.positions[voters, :], k)
    return Committee(frozenset(members), score)


def make_profile(election: Election, key, voters, rule, k,
                 committee_override=None) -> PopulationProfile:
    """Build a PopulationProfile, optionally with an externally given committee."""
    ranking = aggregate_population_ranking(election, voters)
    if committee_override is not None:
        committee = frozenset(committee_override)
    else:
        committee = population_winning_committee(election, voters, rule, k).members
    return PopulationProfile(tuple(key), tuple(sorted(voters)), ranking, committee)
