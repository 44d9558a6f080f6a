import random
from itertools import permutations

import pytest

from direfair import (GenConfig, Rule, default_constraints, generate_election,
                      random_partition, sample_mallows)
from direfair.fixture import two_state_election


def test_genconfig_validation():
    with pytest.raises(ValueError):
        GenConfig(5, 4, 6)
    with pytest.raises(ValueError):
        GenConfig(5, 4, 2, phi=1.5)
    with pytest.raises(ValueError):
        GenConfig(5, 4, 2, min_parts=1)


def test_sampler_zero_dispersion_returns_reference():
    rng = random.Random("x")
    for _ in range(50):
        assert sample_mallows(5, 0.0, (3, 1, 4, 0, 2), rng) == (3, 1, 4, 0, 2)


def test_sampler_output_is_permutation():
    rng = random.Random("y")
    for _ in range(200):
        assert sorted(sample_mallows(6, 0.7, range(6), rng)) == list(range(6))


def test_sampler_validation():
    rng = random.Random("z")
    with pytest.raises(ValueError):
        sample_mallows(3, 2.0, (0, 1, 2), rng)
    with pytest.raises(ValueError):
        sample_mallows(3, 0.5, (0, 1), rng)


def test_sampler_favors_low_displacement():
    # at phi = 0.5 the reference must be the modal ranking
    rng = random.Random("mode")
    counts = {p: 0 for p in permutations(range(3))}
    for _ in range(20000):
        counts[sample_mallows(3, 0.5, (0, 1, 2), rng)] += 1
    assert max(counts, key=counts.get) == (0, 1, 2)
    assert min(counts, key=counts.get) == (2, 1, 0)


def test_random_partition_properties():
    rng = random.Random("parts")
    for _ in range(100):
        n = rng.randint(4, 15)
        hi = rng.randint(2, min(4, n))
        parts = random_partition(n, (2, hi), rng)
        assert 2 <= len(parts) <= hi
        assert all(parts)
        assert sorted(c for part in parts for c in part) == list(range(n))
    with pytest.raises(ValueError):
        random_partition(3, (2, 4), rng)


def test_generation_is_deterministic():
    cfg = GenConfig(8, 10, 3, candidate_attribute_count=1,
                    voter_attribute_count=2, phi=0.5, seed="det")
    a, b = generate_election(cfg), generate_election(cfg)
    assert a.rankings == b.rankings
    assert a.candidate_attributes == b.candidate_attributes
    assert a.voter_attributes == b.voter_attributes
    other = generate_election(GenConfig(8, 10, 3, candidate_attribute_count=1,
                                        voter_attribute_count=2, phi=0.5,
                                        seed="det2"))
    assert other.rankings != a.rankings


def test_generated_election_is_valid():
    from direfair import validate_election
    cfg = GenConfig(9, 12, 4, candidate_attribute_count=2,
                    voter_attribute_count=2, phi=0.8, seed=7)
    election = generate_election(cfg)
    assert validate_election(election) == []
    assert len(election.candidate_attributes) == 2
    assert len(election.voter_attributes) == 2


def test_fixed_reference_pins_phi_zero():
    cfg = GenConfig(5, 4, 2, phi=0.0, reference=(4, 3, 2, 1, 0), seed=1)
    election = generate_election(cfg)
    assert election.rankings == ((4, 3, 2, 1, 0),) * 4


def test_default_constraints_on_demo():
    election = two_state_election()
    cs = default_constraints(election, 4)
    assert cs.diversity == {("gender", "M"): 1, ("gender", "F"): 1,
                            ("race", "Cau"): 1, ("race", "AfAm"): 1}
    # shares: 4 * 10 // 19 = 2 and 4 * 9 // 19 = 1
    assert cs.representation == {("state", "CA"): 2, ("state", "IL"): 1}
    assert cs.population_committees[("state", "CA")] == frozenset({0, 1, 2, 3})
    assert cs.population_committees[("state", "IL")] == frozenset({4, 5, 6, 7})
    assert cs.validate(election, 4) == []


def test_default_constraints_literal_bound_form():
    election = two_state_election()
    cs = default_constraints(election, 4, literal_min_bound=True)
    # the literal form never exceeds 1
    assert cs.representation == {("state", "CA"): 1, ("state", "IL"): 1}
