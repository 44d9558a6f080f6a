import random

import numpy as np
import pytest

from direfair import KERNEL_BACKEND, Rule
from direfair.kernels import pure

from conftest import naive_score, random_instance


def test_backend_identifier():
    assert KERNEL_BACKEND in ("compiled", "pure")
    assert pure.BACKEND == "pure"


def test_pure_scorer_matches_naive():
    rng = random.Random("kernels")
    for _ in range(30):
        election, _, k = random_instance(rng, max_m=8, max_n=8, max_k=3)
        members = tuple(sorted(rng.sample(range(election.num_candidates), k)))
        assert pure.betacc_committee_score(election.positions, members) == \
            naive_score(election, members, Rule.BETACC)


def test_pure_search_is_exhaustive():
    import itertools
    rng = random.Random("kernels:search")
    for _ in range(20):
        election, _, k = random_instance(rng, max_m=7, max_n=6, max_k=3)
        positions = election.positions
        best = max(
            ((pure.betacc_committee_score(positions, c), tuple(c))
             for c in itertools.combinations(range(election.num_candidates), k)),
            key=lambda t: (t[0], tuple(-x for x in t[1])))
        score, members = pure.betacc_best_committee(positions, k)
        assert score == best[0]


def test_search_tie_break_is_lexicographic():
    # one indifferent voter: every committee containing candidate 0 ties
    positions = np.array([[0, 1, 2, 3]], dtype=np.int64)
    score, members = pure.betacc_best_committee(positions, 2)
    assert (score, tuple(members)) == (3, (0, 1))


@pytest.mark.skipif(KERNEL_BACKEND != "compiled",
                    reason="compiled extension not built")
def test_compiled_matches_pure_exactly():
    from direfair.kernels import _ccscore
    rng = random.Random("kernels:parity")
    for _ in range(50):
        election, _, k = random_instance(rng, max_m=9, max_n=10, max_k=4)
        positions = election.positions
        assert _ccscore.betacc_best_committee(positions, k) == \
            pure.betacc_best_committee(positions, k)
        members = tuple(sorted(rng.sample(range(election.num_candidates), k)))
        assert _ccscore.betacc_committee_score(positions, members) == \
            pure.betacc_committee_score(positions, members)
