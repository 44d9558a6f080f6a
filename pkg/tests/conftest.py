"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's solvers: feasibility,
scores, and aggregate rankings are recomputed from first principles with
itertools so the fast implementations can be checked against them.
"""

import itertools
import random

import pytest

from direfair import Rule
from direfair.core import Attribute, Election
from direfair.fixture import (COMMITTEE_SIZE, two_state_constraints,
                              two_state_election)
from direfair.synthgen import default_constraints


@pytest.fixture
def election():
    return two_state_election()


@pytest.fixture
def constraints():
    return two_state_constraints()


@pytest.fixture
def k():
    return COMMITTEE_SIZE


# ---------------------------------------------------------------------------
# independent re-implementations used as oracles


def naive_borda_totals(election):
    """Per-candidate Borda totals, summed ranking by ranking."""
    m = election.num_candidates
    totals = [0] * m
    for ranking in election.rankings:
        for pos, c in enumerate(ranking):
            totals[c] += m - 1 - pos
    return totals


def naive_score(election, members, rule):
    members = set(members)
    m = election.num_candidates
    if rule is Rule.KBORDA:
        totals = naive_borda_totals(election)
        return sum(totals[c] for c in members)
    total = 0
    for ranking in election.rankings:
        total += max(m - 1 - ranking.index(c) for c in members)
    return total


def naive_aggregate(election, voters):
    """Population aggregate ranking: Borda sums descending, id tie-break."""
    m = election.num_candidates
    totals = [0] * m
    for v in voters:
        for pos, c in enumerate(election.rankings[v]):
            totals[c] += m - 1 - pos
    return sorted(range(m), key=lambda c: (-totals[c], c))


def naive_feasible(election, cs, members):
    members = set(members)
    for attr in election.candidate_attributes:
        for label, ids in attr.parts:
            bound = cs.diversity.get((attr.name, label))
            if bound is not None and len(ids & members) < bound:
                return False
    for key, bound in cs.representation.items():
        if len(set(cs.population_committees[key]) & members) < bound:
            return False
    return True


def naive_best(election, cs, k, rule):
    """(score, member tuple) of the constrained optimum, or None.

    Lexicographically first combination wins ties because combinations are
    generated in lex order and only strict improvements replace the best.
    """
    best = None
    for members in itertools.combinations(range(election.num_candidates), k):
        if not naive_feasible(election, cs, members):
            continue
        score = naive_score(election, members, rule)
        if best is None or score > best[0]:
            best = (score, members)
    return best


def naive_fec_exists(election, cs, k, x):
    """Exhaustive check: does a feasible committee exist giving every
    population one of its top-(x+1) aggregate-ranked candidates?"""
    prefixes = []
    for attr in election.voter_attributes:
        for _, voters in attr.parts:
            prefixes.append(set(naive_aggregate(election, voters)[:x + 1]))
    for members in itertools.combinations(range(election.num_candidates), k):
        mset = set(members)
        if not naive_feasible(election, cs, members):
            continue
        if all(mset & prefix for prefix in prefixes):
            return True
    return False


# ---------------------------------------------------------------------------
# random instances for oracle comparisons


def _random_partition_attr(name, labels, item_count, rng):
    """Split 0..item_count-1 into len(labels) non-empty random parts."""
    items = list(range(item_count))
    rng.shuffle(items)
    q = len(labels)
    cuts = sorted(rng.sample(range(1, item_count), q - 1))
    bounds = [0] + cuts + [item_count]
    return Attribute(name, tuple(
        (labels[i], frozenset(items[bounds[i]:bounds[i + 1]])) for i in range(q)))


def random_instance(rng, max_m=10, max_n=12, max_k=4, voter_attrs=None):
    """A random election plus default constraints; returns (election, cs, k)."""
    m = rng.randint(4, max_m)
    n = rng.randint(3, max_n)
    k = rng.randint(2, min(max_k, m - 1))
    rankings = []
    for _ in range(n):
        ranking = list(range(m))
        rng.shuffle(ranking)
        rankings.append(tuple(ranking))
    if voter_attrs is None:
        voter_attrs = rng.choice([1, 1, 2]) if n >= 4 else 1
    cattrs = [_random_partition_attr("grp", ("a", "b"), m, rng)]
    vattrs = [_random_partition_attr(f"pop{i}", ("x", "y"), n, rng)
              for i in range(voter_attrs)]
    election = Election(m, rankings, tuple(cattrs), tuple(vattrs))
    cs = default_constraints(election, k)
    return election, cs, k
