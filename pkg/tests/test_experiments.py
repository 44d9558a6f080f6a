from fractions import Fraction

import pytest

from direfair import (FEC, UEC, WEC, GenConfig, Rule, Scope, detect_simpsons,
                      default_constraints, generate_election,
                      min_proportion_envious, proportion_envious,
                      run_experiment, solve_drcwd, utility_ratio)
from direfair.core import Committee
from direfair.experiments import ExperimentConfig, make_notion, run_instance
from direfair.fixture import two_state_constraints, two_state_election


BASE = GenConfig(8, 10, 3, candidate_attribute_count=1,
                 voter_attribute_count=2, phi=0.5, seed=0)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(sweep="temperature", values=(1,), base=BASE)
    with pytest.raises(ValueError):
        ExperimentConfig(sweep="phi", values=(), base=BASE)
    with pytest.raises(ValueError):
        ExperimentConfig(sweep="phi", values=(0.5,), base=BASE, instances=0)


def test_make_notion():
    assert make_notion("fec", 2) == FEC(2)
    assert make_notion("uec", "3") == UEC(3)
    assert make_notion("wec", "1/13") == WEC(Fraction(1, 13))
    with pytest.raises(ValueError):
        make_notion("abc", 0)


def test_utility_ratio():
    election = two_state_election()
    ef = Committee(frozenset({0, 2, 4, 7}), 285)
    dire = Committee(frozenset({0, 2, 5, 7}), 286)
    assert utility_ratio(ef, dire, election, Rule.KBORDA) == Fraction(285, 286)


def test_proportion_envious_demo():
    election, cs = two_state_election(), two_state_constraints()
    assert proportion_envious(election, cs, {0, 2, 5, 7}, UEC(0)) == 1
    assert proportion_envious(election, cs, {0, 2, 4, 7}, UEC(0)) == 0
    assert min_proportion_envious(election, cs, 4, UEC(0)) == 0
    assert min_proportion_envious(election, cs, 4, WEC(Fraction(0))) == 0


def test_detect_simpsons_needs_two_attributes():
    election, cs = two_state_election(), two_state_constraints()
    report = detect_simpsons(election, cs, Rule.KBORDA, 4, UEC(0))
    assert not report.applicable
    assert not report.global_fail_intersectional_pass


def test_detect_simpsons_divergent_instance():
    gen = GenConfig(10, 12, 3, candidate_attribute_count=1,
                    voter_attribute_count=2, phi=0.5, seed="simpson:17")
    election = generate_election(gen)
    cs = default_constraints(election, 3)
    report = detect_simpsons(election, cs, Rule.KBORDA, 3, UEC(0))
    assert report.applicable
    assert report.global_exists is not None


def test_run_experiment_shape_and_means():
    cfg = ExperimentConfig(sweep="bound", values=(0, 2, 6), base=BASE,
                           notion_kind="uec", instances=2, seed="exp")
    result = run_experiment(cfg)
    assert len(result.rows) == 6
    means = result.point_means()
    assert set(means) == {0, 2, 6}
    for value in cfg.values:
        point = means[value]
        assert 0 <= point["feasible"] <= 2
        assert point["envyfree"] <= point["feasible"]

    # a fully relaxed bound admits the constrained optimum itself
    for row in result.rows:
        if row.value == 6 and row.feasible:
            assert row.envyfree_exists


def test_bound_sweep_reuses_instances():
    cfg = ExperimentConfig(sweep="bound", values=(0, 4), base=BASE,
                           notion_kind="uec", instances=3, seed="pairs")
    result = run_experiment(cfg)
    for index in range(3):
        series = [r for r in result.rows if r.instance == index]
        assert len({r.feasible for r in series}) == 1
        assert len({r.dire_score for r in series}) == 1


def test_phi_and_pi_sweeps_vary_generation():
    cfg = ExperimentConfig(sweep="pi", values=(1, 2), base=BASE,
                           notion_kind="fec", bound=1, instances=1, seed="pi")
    result = run_experiment(cfg)
    assert len(result.rows) == 2

    cfg = ExperimentConfig(sweep="phi", values=(0.1, 1.0), base=BASE,
                           notion_kind="uec", bound=3, instances=1, seed="phi",
                           track_min_envious=False)
    result = run_experiment(cfg)
    assert len(result.rows) == 2
    for row in result.rows:
        if row.feasible:
            assert row.proportion_envious is not None


def test_instance_row_shape():
    cfg = ExperimentConfig(sweep="bound", values=(0,), base=BASE,
                           notion_kind="uec", instances=1, seed="shape")
    r = run_instance(cfg, 0, 0)
    assert r.value == 0 and r.instance == 0
    if r.feasible:
        assert r.dire_score is not None
    else:
        assert r.dire_score is None and r.proportion_envious is None
