"""Equations over permutation digraphs: deciders, enumerators and oracles."""

from .arith import BudgetExceededError, CycleOverflowError
from .cycles import C, ONE, ZERO, CycleSet, add, explicit_product_oracle, mul, normalize, power
from .decide import (
    DecisionReport,
    Refutation,
    decide_multi_target,
    decide_scaled,
    decide_scaled_paper,
    deep_decide,
    necessary_gcd_condition,
    necessary_weight_condition,
    pi_e,
    pi_f,
    solve_prime_power,
    theorem_characterization,
)
from .enumeration import (
    FeasibleDivisorSet,
    count_solutions,
    decide_by_enumeration,
    decide_sum_lhs,
    enumerate_solutions,
    feasible_divisors,
    representable,
)
from .parser import evaluate, parse, print_canonical

__version__ = "0.1.0"
