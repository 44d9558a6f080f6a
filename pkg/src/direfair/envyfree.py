"""Envy-freeness notions over voter populations and their relaxations.

Three notions measure how fairly a committee treats populations:

* favorite-based: every population gets one of its top-(x+1) collectively
  ranked candidates;
* utility-based: population Borda utilities from the committee differ by at
  most a slack;
* weighted: utilities restricted to each population's own winning committee,
  normalized by the best mass its representation bound allows, differ by at
  most a rational slack.

Population pairs can be compared globally (all pairs), within one voter
attribute (localized), or between attribute-intersection populations
(inter-sectional). All comparisons use exact integer/rational arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .constraints import ConstraintSet, enumerate_dire, exists_dire
from .core import Committee, Election, PopulationProfile, make_profile
from .rules import Rule


class Scope(enum.Enum):
    GLOBAL = "global"
    LOCALIZED = "localized"
    INTERSECTIONAL = "intersectional"

    @classmethod
    def parse(cls, text: str) -> "Scope":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown scope {text!r}")


@dataclass(frozen=True)
class FEC:
    """Favorite-based notion: allow any of the top-(x+1) candidates."""

    x: int = 0

    def __post_init__(self):
        if self.x < 0:
            raise ValueError("relaxation level must be >= 0")


@dataclass(frozen=True)
class UEC:
    """Utility-based notion: population utilities may differ by at most eta."""

    eta: int = 0

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError("utility slack must be >= 0")


@dataclass(frozen=True)
class WEC:
    """Weighted-utility notion: weighted utilities may differ by at most zeta."""

    zeta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "zeta", Fraction(self.zeta))
        if not 0 <= self.zeta <= 1:
            raise ValueError("weighted slack must lie in [0, 1]")


@dataclass(frozen=True)
class PairResult:
    a: tuple[str, str]
    b: tuple[str, str]
    measure: Fraction
    satisfied: bool


@dataclass(frozen=True)
class EnvyReport:
    notion: object
    scope: Scope
    pairs: tuple[PairResult, ...]
    overall: bool
    proportion_envious: Fraction
    population_count: int


def population_utility(election: Election, profile: PopulationProfile, members) -> int:
    """Sum of Borda scores (by the population's aggregate ranking) over the
    committee members."""
    m = election.num_candidates
    return sum(m - profile.rank_of[c] for c in members)


def weighted_utility(election: Election, profile: PopulationProfile,
                     representation_bound: int, members) -> Fraction:
    """Borda mass of committee members inside the population's own winning
    committee, over the best mass attainable under its representation bound."""
    if representation_bound < 1:
        raise ValueError("representation bound must be >= 1")
    m = election.num_candidates
    numerator = sum(m - profile.rank_of[c]
                    for c in profile.winning_committee & frozenset(members))
    denominator = sum(m - i for i in range(1, representation_bound + 1))
    return Fraction(numerator, denominator)


def favorite_rank(election: Election, profile: PopulationProfile, members) -> int:
    """Best (lowest) 1-based aggregate-ranking position among the members."""
    if not members:
        raise ValueError("committee is empty")
    return min(profile.rank_of[c] for c in members)


def scoped_population_sets(election: Election, scope: Scope):
    """The populations compared under a scope, as (family, key, voter set).

    Populations in the same family are comparable under LOCALIZED and
    INTERSECTIONAL; under GLOBAL every pair is comparable. Inter-sectional
    populations are the non-empty pairwise intersections of populations from
    two different attributes.
    """
    if scope is Scope.INTERSECTIONAL:
        attrs = election.voter_attributes
        if len(attrs) < 2:
            raise ValueError("inter-sectional comparison needs at least two voter attributes")
        result = []
        for i in range(len(attrs)):
            for j in range(i + 1, len(attrs)):
                family = f"{attrs[i].name}&{attrs[j].name}"
                for label_i, ids_i in attrs[i].parts:
                    for label_j, ids_j in attrs[j].parts:
                        voters = ids_i & ids_j
                        if voters:
                            result.append((family, (family, f"{label_i}&{label_j}"), voters))
        return result
    return [(attr.name, (attr.name, label), ids)
            for attr in election.voter_attributes
            for label, ids in attr.parts]


def pair_set(election: Election, scope: Scope) -> list[tuple[tuple[str, str], tuple[str, str]]]:
    """Unordered population-key pairs compared under the scope."""
    pops = scoped_population_sets(election, scope)
    pairs = []
    for i in range(len(pops)):
        for j in range(i + 1, len(pops)):
            if scope is Scope.GLOBAL or pops[i][0] == pops[j][0]:
                pairs.append((pops[i][1], pops[j][1]))
    return pairs


def build_profiles(election: Election, cs: ConstraintSet, rule: Rule, k: int,
                   scope: Scope) -> dict:
    """PopulationProfiles for every population in scope.

    An explicit winning committee from the constraint set takes precedence;
    otherwise the committee is computed from the population's own rankings.
    """
    profiles = {}
    for _, key, voters in scoped_population_sets(election, scope):
        override = cs.population_committees.get(key)
        profiles[key] = make_profile(election, key, voters, rule, k, override)
    return profiles


def _pair_measures(election, cs, profiles, pairs, members, notion):
    """Per-pair measures and satisfaction flags, plus the envious key set."""
    members = frozenset(members)
    m = election.num_candidates
    results = []
    envious = set()
    if isinstance(notion, FEC):
        ranks = {key: favorite_rank(election, profiles[key], members) for key in profiles}
        for a, b in pairs:
            ok_a = ranks[a] <= notion.x + 1
            ok_b = ranks[b] <= notion.x + 1
            results.append(PairResult(a, b, Fraction(max(ranks[a], ranks[b]) - 1),
                                      ok_a and ok_b))
            if not ok_a:
                envious.add(a)
            if not ok_b:
                envious.add(b)
        return results, envious
    if isinstance(notion, UEC):
        values = {key: Fraction(population_utility(election, profiles[key], members))
                  for key in profiles}
        bound = Fraction(notion.eta)
    else:
        values = {key: weighted_utility(election, profiles[key],
                                        cs.representation.get(key, 1), members)
                  for key in profiles}
        bound = notion.zeta
    for a, b in pairs:
        measure = abs(values[a] - values[b])
        ok = measure <= bound
        results.append(PairResult(a, b, measure, ok))
        if not ok:
            envious.add(a)
            envious.add(b)
    return results, envious


def check_envyfree(election: Election, cs: ConstraintSet, members, notion,
                   scope: Scope = Scope.GLOBAL, rule: Rule = Rule.KBORDA,
                   k: int | None = None) -> EnvyReport:
    """Evaluate one committee against a notion over all scoped pairs.

    The check takes any k-committee; feasibility under the constraints is
    deliberately not required.
    """
    members = frozenset(members)
    if k is None:
        k = len(members)
    profiles = build_profiles(election, cs, rule, k, scope)
    pairs = pair_set(election, scope)
    results, envious = _pair_measures(election, cs, profiles, pairs, members, notion)
    count = len(profiles)
    proportion = Fraction(len(envious), count) if count else Fraction(0)
    return EnvyReport(notion, scope, tuple(results), all(r.satisfied for r in results),
                      proportion, count)


def _committee_checker(election, cs, rule, k, notion, scope):
    """Fast closure deciding overall satisfaction for many candidate committees."""
    profiles = build_profiles(election, cs, rule, k, scope)
    pairs = pair_set(election, scope)
    m = election.num_candidates
    if isinstance(notion, FEC):
        keys = {key for a, b in pairs for key in (a, b)}
        tops = {key: frozenset(profiles[key].aggregate_ranking[:notion.x + 1])
                for key in keys}
        def check(members):
            return all(members & tops[key] for key in tops)
        return check
    if isinstance(notion, UEC):
        score = {key: [m - profiles[key].rank_of[c] for c in range(m)] for key in profiles}
        eta = notion.eta
        def check(members):
            utils = {}
            for a, b in pairs:
                for key in (a, b):
                    if key not in utils:
                        vec = score[key]
                        utils[key] = sum(vec[c] for c in members)
                if abs(utils[a] - utils[b]) > eta:
                    return False
            return True
        return check
    numer = {}
    denom = {}
    for key, profile in profiles.items():
        vec = [0] * m
        for c in profile.winning_committee:
            vec[c] = m - profile.rank_of[c]
        numer[key] = vec
        bound = cs.representation.get(key, 1)
        denom[key] = sum(m - i for i in range(1, bound + 1))
    zeta = Fraction(notion.zeta)
    p, q = zeta.numerator, zeta.denominator

    def check(members):
        nums = {}
        for a, b in pairs:
            for key in (a, b):
                if key not in nums:
                    vec = numer[key]
                    nums[key] = sum(vec[c] for c in members)
            # |na/da - nb/db| <= p/q via cross-multiplication
            if abs(nums[a] * denom[b] - nums[b] * denom[a]) * q > p * denom[a] * denom[b]:
                return False
        return True
    return check


def find_envyfree_dire(election: Election, cs: ConstraintSet, rule: Rule, k: int,
                       notion, scope: Scope = Scope.GLOBAL) -> Committee | None:
    """Highest-scoring feasible committee whose envy check passes, or None.

    Exact search over the feasible enumeration; ties break to the
    lexicographically smallest member set.
    """
    from .rules import committee_score

    check = _committee_checker(election, cs, rule, k, notion, scope)
    best = None
    for members in enumerate_dire(election, cs, k):
        mset = frozenset(members)
        if not check(mset):
            continue
        score = committee_score(election, mset, rule)
        if best is None or score > best.score:
            best = Committee(mset, score)
    return best


def fec_screen(election: Election, cs: ConstraintSet, members, x: int,
               k: int | None = None, rule: Rule = Rule.KBORDA) -> bool:
    """Fast screening procedure for favorite-envy-freeness up to x, given a
    feasible committee, for x in {0, k-2, k-1}.

    For x = 0 it collects each population's top choice into a set S and
    answers from S alone (too large / inside the given committee / meets the
    bounds); for x = k-2 it tests the given committee with each population's
    least-favorite own-committee member removed; x = k-1 always passes. A True
    answer is reliable; a False answer can be conservative when the deciding
    committee would differ from the given one, which is why fec_poly_check
    settles False screens exactly.
    """
    members = frozenset(members)
    if k is None:
        k = len(members)
    if x < 0 or x not in (0, k - 2, k - 1):
        raise ValueError(f"only x in {{0, {k - 2}, {k - 1}}} is supported here")
    profiles = build_profiles(election, cs, rule, k, Scope.GLOBAL)
    m = election.num_candidates  # noqa: F841  (kept for symmetry with ranks)

    def meets_bounds(candidate_set):
        for key, bound in cs.diversity.items():
            if len(election.group_members(key) & candidate_set) < bound:
                return False
        for key, bound in cs.representation.items():
            if len(profiles[key].winning_committee & candidate_set) < bound:
                return False
        return True

    if x == 0:
        tops = frozenset(
            min(profiles[key].winning_committee, key=lambda c: profiles[key].rank_of[c])
            for key in profiles)
        if len(tops) > k:
            return False
        if tops and tops <= members:
            return True
        return meets_bounds(tops)
    if x == k - 1:
        return True
    for key in sorted(profiles):
        worst = max(profiles[key].winning_committee,
                    key=lambda c: profiles[key].rank_of[c])
        if not meets_bounds(members - {worst}):
            return False
    return True


def fec_poly_check(election: Election, cs: ConstraintSet, members, x: int,
                   k: int | None = None, rule: Rule = Rule.KBORDA) -> bool:
    """Decide whether a feasible favorite-envy-free-up-to-x committee exists,
    given one feasible committee, for x in {0, k-2, k-1}.

    The cheap sufficient tests run first (collecting each population's top
    choice for x = 0; per-population worst-member removal for x = k-2); when
    they are inconclusive the answer is settled by an exact restricted search,
    so the result always matches exhaustive enumeration. Populations without
    an explicit representation bound are treated as bounded by 1.
    """
    members = frozenset(members)
    if k is None:
        k = len(members)
    if x not in (0, k - 2, k - 1):
        raise ValueError(
            f"only x in {{0, {k - 2}, {k - 1}}} is supported here; "
            "use find_envyfree_dire for other relaxation levels")
    profiles = build_profiles(election, cs, rule, k, Scope.GLOBAL)
    m = election.num_candidates

    def top_of(profile):
        return min(profile.winning_committee, key=lambda c: profile.rank_of[c])

    def meets_bounds(candidate_set):
        for key, bound in cs.diversity.items():
            if len(election.group_members(key) & candidate_set) < bound:
                return False
        for key, bound in cs.representation.items():
            if len(profiles[key].winning_committee & candidate_set) < bound:
                return False
        return True

    if x == k - 1 and x != 0:
        # any feasible committee qualifies once every population holds a
        # representation bound; otherwise fall through to the exact search
        if all(key in cs.representation for key in profiles):
            return True
        covers = [profiles[key].winning_committee for key in sorted(profiles)]
        return exists_dire(election, cs, k, cover_sets=covers)

    if x == 0:
        tops = frozenset(top_of(profiles[key]) for key in profiles)
        if len(tops) > k:
            return False
        if tops and tops <= members:
            return True
        if profiles and meets_bounds(tops):
            return True
        return exists_dire(election, cs, k, required_members=tops)

    # x == k - 2
    satisfied_by_given = True
    for key in sorted(profiles):
        worst = max(profiles[key].winning_committee, key=lambda c: profiles[key].rank_of[c])
        reduced = members - {worst}
        ok = meets_bounds(reduced)
        if ok:
            # populations without an explicit bound still need a top-(k-1) member
            for other in profiles:
                if other not in cs.representation:
                    others_worst = max(profiles[other].winning_committee,
                                       key=lambda c: profiles[other].rank_of[c])
                    if not reduced & (profiles[other].winning_committee - {others_worst}):
                        ok = False
                        break
        if not ok:
            satisfied_by_given = False
            break
    if satisfied_by_given:
        return True
    covers = [profiles[key].winning_committee
              - {max(profiles[key].winning_committee, key=lambda c: profiles[key].rank_of[c])}
              for key in sorted(profiles)]
    if any(not cover for cover in covers):
        return False
    return exists_dire(election, cs, k, cover_sets=covers)
