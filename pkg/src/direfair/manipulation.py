"""Population-level manipulation search for separable committee rules.

A manipulator population swaps two candidates that both sit outside its own
winning committee in every one of its members' rankings. The swap cannot change
the manipulator's own committee (the rule is separable and the pair lies below
its top-k), but it can change the winning committees of overlapping populations
under other voter attributes, and through them the constrained outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constraints import ConstraintSet, resolve_population_committees, solve_drcwd
from .core import Election, population_winning_committee
from .rules import Rule


@dataclass(frozen=True)
class ManipulationOutcome:
    found: bool
    manipulator: tuple[str, str] | None = None
    swap: tuple[int, int] | None = None
    original_population_committees: dict = field(default_factory=dict)
    original_winner: frozenset | None = None
    manipulated_population_committees: dict = field(default_factory=dict)
    manipulated_winner: frozenset | None = None
    harmed: tuple[str, ...] = ()


def swap_candidates(election: Election, voters, a: int, b: int) -> Election:
    """New election where the given voters' positions of a and b are exchanged.

    Applying the same swap twice restores the original election exactly.
    """
    voters = frozenset(voters)
    rankings = []
    for v, ranking in enumerate(election.rankings):
        if v in voters:
            rankings.append(tuple(b if c == a else a if c == b else c for c in ranking))
        else:
            rankings.append(ranking)
    return Election(election.num_candidates, rankings,
                    election.candidate_attributes, election.voter_attributes)


def _all_population_committees(election, rule, k):
    return {key: population_winning_committee(election, voters, rule, k).members
            for key, voters in election.populations()}


def manipulate_drcwd(election: Election, cs: ConstraintSet, rule: Rule, k: int,
                     manipulator: tuple[str, str] | None = None) -> ManipulationOutcome:
    """Search for a preference swap by one population that breaks the
    constrained outcome for some other population or candidate group.

    The manipulator defaults to the largest population (first in key order on
    size ties); pass a population key to fix it, and see any_population_can_
    manipulate for the loop over all of them. Swaps are explored over ascending
    candidate-id pairs drawn from outside the manipulator's winning committee,
    so results are reproducible. The input election is never mutated.

    A swap counts as successful when, after recomputing every population's
    winning committee and the constrained winner, either some other
    population's committee changed and its representation bound fails, or some
    diversity bound fails (which includes the constrained problem becoming
    infeasible).
    """
    if rule is not Rule.KBORDA:
        raise ValueError("manipulation search requires a separable rule (k-Borda)")
    populations = dict(election.populations())
    if not populations:
        return ManipulationOutcome(False)
    if manipulator is None:
        manipulator = min(populations, key=lambda key: (-len(populations[key]), key))
    elif manipulator not in populations:
        raise KeyError(f"unknown population {manipulator}")
    voters = populations[manipulator]

    original_wps = _all_population_committees(election, rule, k)
    original_cs = resolve_population_committees(election, cs, rule, k)
    original_winner = solve_drcwd(election, original_cs, rule, k)
    outside = sorted(set(range(election.num_candidates)) - original_wps[manipulator])

    base = ManipulationOutcome(
        False, manipulator, None, original_wps,
        original_winner.members if original_winner else None)

    for i in range(len(outside)):
        for j in range(i + 1, len(outside)):
            a, b = outside[i], outside[j]
            manipulated = swap_candidates(election, voters, a, b)
            new_wps = _all_population_committees(manipulated, rule, k)
            new_cs = ConstraintSet(
                dict(cs.diversity), dict(cs.representation),
                {key: new_wps.get(key, committee)
                 for key, committee in original_cs.population_committees.items()})
            winner = solve_drcwd(manipulated, new_cs, rule, k)
            harmed = []
            for key, bound in sorted(cs.representation.items()):
                changed = new_wps.get(key) != original_wps.get(key)
                # harm is measured against the population's true (pre-swap)
                # committee; the solver meets the recorded bounds by construction
                met = (winner is not None
                       and len(original_cs.population_committees[key] & winner.members) >= bound)
                if changed and not met:
                    harmed.append(f"representation {key[0]}/{key[1]}")
            for key, bound in sorted(cs.diversity.items()):
                met = (winner is not None
                       and len(election.group_members(key) & winner.members) >= bound)
                if not met:
                    harmed.append(f"diversity {key[0]}/{key[1]}")
            if harmed:
                return ManipulationOutcome(
                    True, manipulator, (a, b), original_wps,
                    original_winner.members if original_winner else None,
                    new_wps, winner.members if winner else None, tuple(harmed))
    return base


def any_population_can_manipulate(election: Election, cs: ConstraintSet,
                                  rule: Rule, k: int) -> ManipulationOutcome:
    """Try every population as the manipulator, in key order."""
    outcome = ManipulationOutcome(False)
    for key, _ in sorted(election.populations()):
        outcome = manipulate_drcwd(election, cs, rule, k, manipulator=key)
        if outcome.found:
            return outcome
    return outcome
