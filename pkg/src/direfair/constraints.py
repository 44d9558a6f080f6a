"""Diversity and representation constraints, feasibility and exact DRCWD.

Diversity bounds require at least l candidates from a candidate group;
representation bounds require at least l candidates from a population's own
winning committee. A committee satisfying every bound is called feasible here
(a "DiRe" committee).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .core import Committee, Election, population_winning_committee
from .rules import Rule


@dataclass(frozen=True)
class ConstraintSet:
    """Lower bounds keyed by (attribute name, label), plus each constrained
    population's winning committee."""

    diversity: dict = field(default_factory=dict)
    representation: dict = field(default_factory=dict)
    population_committees: dict = field(default_factory=dict)

    def validate(self, election: Election, k: int) -> list[str]:
        problems = []
        for key, bound in self.diversity.items():
            try:
                size = len(election.group_members(key))
            except KeyError:
                problems.append(f"diversity bound for unknown group {key}")
                continue
            if not 1 <= bound <= min(k, size):
                problems.append(
                    f"diversity bound {bound} for {key} outside [1, min(k, |G|)={min(k, size)}]")
        for key, bound in self.representation.items():
            if not 1 <= bound <= k:
                problems.append(f"representation bound {bound} for {key} outside [1, {k}]")
            committee = self.population_committees.get(key)
            if committee is None:
                problems.append(f"population {key} has a bound but no winning committee")
            elif len(committee) != k:
                problems.append(
                    f"population committee for {key} has size {len(committee)}, expected {k}")
        return problems

    def requirement_sets(self, election: Election):
        """All (description, candidate set, bound) pairs to enforce."""
        for key, bound in sorted(self.diversity.items()):
            yield ("diversity", key, election.group_members(key), bound)
        for key, bound in sorted(self.representation.items()):
            yield ("representation", key, frozenset(self.population_committees[key]), bound)


def resolve_population_committees(election: Election, cs: ConstraintSet,
                                  rule: Rule, k: int) -> ConstraintSet:
    """Fill in missing winning committees for constrained populations.

    Explicit committees in the constraint set take precedence over computed
    ones.
    """
    committees = dict(cs.population_committees)
    for key in cs.representation:
        if key not in committees:
            voters = election.population_members(key)
            committees[key] = population_winning_committee(election, voters, rule, k).members
    return ConstraintSet(dict(cs.diversity), dict(cs.representation), committees)


def is_dire(election: Election, members, cs: ConstraintSet) -> tuple[bool, list[str]]:
    """Check every bound; the violation list names each failing constraint
    with its shortfall."""
    members = frozenset(members)
    violations = []
    for kind, key, ids, bound in cs.requirement_sets(election):
        have = len(ids & members)
        if have < bound:
            violations.append(
                f"{kind} {key[0]}/{key[1]}: need {bound}, have {have} (short {bound - have})")
    return not violations, violations


def _quick_infeasible(election: Election, cs: ConstraintSet, k: int) -> bool:
    """Fast necessary checks; search exhaustion provides completeness."""
    for attr in election.candidate_attributes:
        total = 0
        for label, ids in attr.parts:
            bound = cs.diversity.get((attr.name, label))
            if bound is None:
                continue
            if bound > len(ids):
                return True
            total += bound
        if total > k:
            return True
    for _, key, ids, bound in cs.requirement_sets(election):
        if bound > len(ids):
            return True
    return False


def enumerate_dire(election: Election, cs: ConstraintSet, k: int):
    """Yield every feasible k-committee exactly once, members ascending,
    committees in lexicographic order."""
    m = election.num_candidates
    if not 1 <= k <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    if _quick_infeasible(election, cs, k):
        return
    requirements = [(ids, bound) for _, _, ids, bound in cs.requirement_sets(election)]
    # suffix_counts[r][c] = how many candidates with id >= c belong to requirement r
    suffix_counts = []
    for ids, _ in requirements:
        counts = [0] * (m + 1)
        for c in range(m - 1, -1, -1):
            counts[c] = counts[c + 1] + (1 if c in ids else 0)
        suffix_counts.append(counts)

    chosen = []
    have = [0] * len(requirements)

    def recurse(next_c):
        if len(chosen) == k:
            if all(h >= bound for h, (_, bound) in zip(have, requirements)):
                yield tuple(chosen)
            return
        slots = k - len(chosen)
        if m - next_c < slots:
            return
        # prune: a requirement that cannot be met even taking every remaining
        # member of its candidate set
        for r, (ids, bound) in enumerate(requirements):
            if have[r] + suffix_counts[r][next_c] < bound:
                return
        for c in range(next_c, m - slots + 1):
            chosen.append(c)
            for r, (ids, _) in enumerate(requirements):
                if c in ids:
                    have[r] += 1
            yield from recurse(c + 1)
            for r, (ids, _) in enumerate(requirements):
                if c in ids:
                    have[r] -= 1
            chosen.pop()

    yield from recurse(0)


def exists_dire(election: Election, cs: ConstraintSet, k: int,
                required_members=frozenset(), cover_sets=()) -> bool:
    """Does a feasible k-committee exist that contains all required members
    and intersects every cover set?"""
    required = frozenset(required_members)
    if len(required) > k:
        return False
    covers = [frozenset(s) for s in cover_sets]
    for members in enumerate_dire(election, cs, k):
        mset = frozenset(members)
        if required <= mset and all(mset & s for s in covers):
            return True
    return False


def solve_drcwd(election: Election, cs: ConstraintSet, rule: Rule, k: int) -> Committee | None:
    """Exact feasibility-constrained optimum, or None when infeasible.

    Ties break to the lexicographically smallest member set. k-Borda uses a
    branch and bound over candidates in descending total-score order; the
    Chamberlin-Courant rule scores each feasible committee with the kernel.
    """
    if rule is Rule.KBORDA:
        return _solve_kborda(election, cs, k)
    best = None
    for members in enumerate_dire(election, cs, k):
        score = kernels.betacc_committee_score(election.positions, members)
        if best is None or score > best.score:
            best = Committee(frozenset(members), score)
    return best


def _solve_kborda(election: Election, cs: ConstraintSet, k: int) -> Committee | None:
    m = election.num_candidates
    if not 1 <= k <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    if _quick_infeasible(election, cs, k):
        return None
    totals = election.candidate_borda_totals
    order = sorted(range(m), key=lambda c: (-int(totals[c]), c))
    requirements = [(ids, bound) for _, _, ids, bound in cs.requirement_sets(election)]
    suffix_counts = []
    for ids, _ in requirements:
        counts = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            counts[i] = counts[i + 1] + (1 if order[i] in ids else 0)
        suffix_counts.append(counts)
    # prefix sums of the best remaining scores (candidates sorted descending)
    top_remaining = [0] * (m + 2)
    for i in range(m - 1, -1, -1):
        top_remaining[i] = top_remaining[i + 1] + int(totals[order[i]])

    best_score = None
    best_members = None
    chosen = []
    have = [0] * len(requirements)

    def recurse(next_i, score):
        nonlocal best_score, best_members
        if len(chosen) == k:
            if all(h >= bound for h, (_, bound) in zip(have, requirements)):
                members = tuple(sorted(chosen))
                if (best_score is None or score > best_score
                        or (score == best_score and members < best_members)):
                    best_score, best_members = score, members
            return
        slots = k - len(chosen)
        if m - next_i < slots:
            return
        for r, (ids, bound) in enumerate(requirements):
            if have[r] + suffix_counts[r][next_i] < bound:
                return
        # admissible bound: current score plus the best `slots` remaining
        bound_score = score + top_remaining[next_i] - top_remaining[next_i + slots]
        if best_score is not None and bound_score < best_score:
            return
        for i in range(next_i, m - slots + 1):
            c = order[i]
            chosen.append(c)
            for r, (ids, _) in enumerate(requirements):
                if c in ids:
                    have[r] += 1
            recurse(i + 1, score + int(totals[c]))
            for r, (ids, _) in enumerate(requirements):
                if c in ids:
                    have[r] -= 1
            chosen.pop()

    recurse(0, 0)
    if best_score is None:
        return None
    return Committee(frozenset(best_members), best_score)
