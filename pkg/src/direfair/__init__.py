"""Constrained multiwinner elections with envy-free fairness across voter
populations: exact solvers, envy notions, manipulation search, synthetic data,
and an experiment harness."""

from .constraints import (ConstraintSet, enumerate_dire, exists_dire, is_dire,
                          resolve_population_committees, solve_drcwd)
from .core import (Attribute, Committee, Election, PopulationProfile,
                   aggregate_population_ranking, borda_vector, make_profile,
                   position_of, population_winning_committee, validate_election)
from .envyfree import (FEC, UEC, WEC, EnvyReport, PairResult, Scope,
                       build_profiles, check_envyfree, favorite_rank,
                       fec_poly_check, fec_screen, find_envyfree_dire, pair_set,
                       population_utility, scoped_population_sets,
                       weighted_utility)
from .experiments import (ExperimentConfig, ExperimentResult, InstanceRow,
                          SimpsonsReport, detect_simpsons, make_notion,
                          min_proportion_envious, proportion_envious,
                          run_experiment, utility_ratio)
from .fileio import parse_election, serialize_election
from .kernels import BACKEND as KERNEL_BACKEND
from .manipulation import (ManipulationOutcome, any_population_can_manipulate,
                           manipulate_drcwd, swap_candidates)
from .rules import Rule, committee_score, optimal_committee
from .synthgen import (GenConfig, default_constraints, generate_election,
                       random_partition, sample_mallows)

__version__ = "0.1.0"
