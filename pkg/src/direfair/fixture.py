"""A small two-state demo election used in the docs and tests.

Eight candidates with gender and race attributes, nineteen voters split into
two state populations (ten in CA, nine in IL), committee size four. Every CA
voter shares one ranking and every IL voter another, which pins down both
population aggregates exactly. The numbers were chosen so that the
unconstrained optimum is all-male, the constrained optimum skips IL's top
choice, and slightly cheaper committees repair the three envy notions; see
tests/test_acceptance.py for the search that derives this instance from those
requirements.
"""

from __future__ import annotations

from .constraints import ConstraintSet
from .core import Attribute, Election

CA_RANKING = (0, 1, 2, 3, 5, 4, 7, 6)
IL_RANKING = (4, 5, 6, 7, 0, 1, 2, 3)
COMMITTEE_SIZE = 4


def two_state_election() -> Election:
    rankings = [CA_RANKING] * 10 + [IL_RANKING] * 9
    return Election(
        8, rankings,
        candidate_attributes=(
            Attribute("gender", (("M", frozenset({0, 1, 4, 5})),
                                 ("F", frozenset({2, 3, 6, 7})))),
            Attribute("race", (("Cau", frozenset({0, 1, 2, 3})),
                               ("AfAm", frozenset({4, 5, 6, 7})))),
        ),
        voter_attributes=(
            Attribute("state", (("CA", frozenset(range(10))),
                                ("IL", frozenset(range(10, 19))))),
        ),
    )


def two_state_constraints() -> ConstraintSet:
    """At least two members per gender, race, and state committee."""
    return ConstraintSet(
        diversity={("gender", "M"): 2, ("gender", "F"): 2,
                   ("race", "Cau"): 2, ("race", "AfAm"): 2},
        representation={("state", "CA"): 2, ("state", "IL"): 2},
        population_committees={("state", "CA"): frozenset({0, 1, 2, 3}),
                               ("state", "IL"): frozenset({4, 5, 6, 7})},
    )
