"""Committee scoring rules: k-Borda (separable) and Chamberlin-Courant.

All scores are exact integers (sums of Borda scores); no floating point is
involved in rule evaluation.
"""

from __future__ import annotations

import enum

from . import kernels
from .core import Committee, Election

# Exhaustive Chamberlin-Courant search is exponential in m; refuse above this
# unless the caller raises the limit explicitly.
CC_DEFAULT_CANDIDATE_LIMIT = 20


class Rule(enum.Enum):
    KBORDA = "kborda"
    BETACC = "betacc"

    @classmethod
    def parse(cls, text: str) -> "Rule":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown rule {text!r}; expected kborda or betacc")


def committee_score(election: Election, members, rule: Rule) -> int:
    """Score of a candidate subset under the given rule."""
    members = frozenset(members)
    bad = [c for c in members if not 0 <= c < election.num_candidates]
    if bad:
        raise KeyError(f"committee members not in candidate set: {sorted(bad)}")
    if rule is Rule.KBORDA:
        totals = election.candidate_borda_totals
        return int(sum(totals[c] for c in members))
    return kernels.betacc_committee_score(election.positions, members)


def optimal_committee(election: Election, rule: Rule, k: int,
                      cc_candidate_limit: int = CC_DEFAULT_CANDIDATE_LIMIT) -> Committee:
    """Unconstrained score-maximizing committee; ties break to the
    lexicographically smallest member set."""
    m = election.num_candidates
    if not 1 <= k <= m:
        raise ValueError(f"committee size {k} out of range [1, {m}]")
    if rule is Rule.KBORDA:
        totals = election.candidate_borda_totals
        members = frozenset(sorted(range(m), key=lambda c: (-int(totals[c]), c))[:k])
        return Committee(members, int(sum(totals[c] for c in members)))
    if m > cc_candidate_limit:
        raise ValueError(
            f"exact Chamberlin-Courant search capped at {cc_candidate_limit} "
            f"candidates (got {m}); raise cc_candidate_limit to override")
    score, members = kernels.betacc_best_committee(election.positions, k)
    return Committee(frozenset(members), score)
