"""Parallel simulated annealing for the Mirrored Traveling Tournament Problem."""
from .annealer import HAVE_COMPILED, AnnealResult, Evaluation, SAConfig, accept, anneal
from .instance import (Instance, load_instance, make_circular_instance, parse_instance,
                       render_instance)
from .neighborhood import (MoveKind, initial_schedule, partial_swap_rounds,
                           partial_swap_teams, select_random_neighbor, swap_homes,
                           swap_rounds, swap_teams)
from .oracle import enumerate_feasible, oracle_team_distance
from .parallel import RunConfig, RunStats, compute_speedup, run_psa
from .rng import Rng, replica_seed
from .schedule import (Feasibility, Schedule, atmost_satisfied, check_schedule,
                       is_mirrored, is_valid_structure, team_itinerary_distance,
                       travel_distance)

__all__ = [
    "AnnealResult", "Evaluation", "Feasibility", "HAVE_COMPILED", "Instance", "MoveKind",
    "Rng", "RunConfig", "RunStats", "SAConfig", "Schedule", "accept", "anneal",
    "atmost_satisfied", "check_schedule", "compute_speedup", "enumerate_feasible",
    "initial_schedule", "is_mirrored", "is_valid_structure", "load_instance",
    "make_circular_instance", "oracle_team_distance", "parse_instance",
    "partial_swap_rounds", "partial_swap_teams", "render_instance", "replica_seed",
    "run_psa", "select_random_neighbor", "swap_homes", "swap_rounds", "swap_teams",
    "team_itinerary_distance", "travel_distance",
]
