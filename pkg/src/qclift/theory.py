"""Exact checks of the cycle-survival probabilities of the three lifting methods.

Setting: a 4-chain ``[[a, b], [c, d]]`` with entries drawn uniformly and
independently from ``{0, ..., 2q-1}`` (``L0 = 2q``) is lifted to circulant
size ``q``. ``C0`` is the event that it closes at size ``2q``
(``a - b - c + d = 0 mod 2q``), ``C1`` that the lifted chain closes at size
``q``.

The brute-force oracles enumerate all ``(2q)^4`` tuples and lift them with the
functions from :mod:`qclift.lifting`. They do not use any decomposition of the
entries.

The independence model: each of ``y`` non-closing 4-chains survives
under exactly one of ``N_r`` scale values with probability
``p_fl = 5/(4(2q-1))`` each, or under none of them. ``X_i`` counts the chains
surviving under scale ``i``; the best scale leaves ``min_i X_i`` of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, sqrt
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .exponent import ExponentMatrix
from .lifting import floor_lift, fsm_lift, modulo_lift, paired

__all__ = [
    "ENUMERATION_BUDGET",
    "ConditionalProbabilities",
    "EnumerationBudgetError",
    "MonteCarloEstimate",
    "TheoryParams",
    "TheoryReport",
    "absence_probabilities",
    "absence_probability_exact",
    "brute_force_floor",
    "brute_force_fsm_pair",
    "brute_force_modulo",
    "cycle_slice_counts",
    "ec_fsml2_conditioned",
    "ec_fsml2_formula",
    "ec_fsml_exact",
    "ec_fsml_montecarlo",
    "emin_half_binomial",
    "emin_half_binomial_printed",
    "lifted_cycle_expectations",
    "alternating_binomial_vanishes",
    "alternating_binomial_sum",
    "model_outcomes",
    "p_fl",
    "p_mod",
    "pair_is_admissible",
    "theory_report",
]

ENUMERATION_BUDGET = 10**7


class EnumerationBudgetError(ValueError):
    """The exact model enumeration would exceed the outcome budget; use Monte Carlo."""


class ConditionalProbabilities(NamedTuple):
    given_cycle: Fraction
    given_no_cycle: Fraction

    def __str__(self):
        return f"{self.given_cycle},{self.given_no_cycle}"


def _check_q(q: int) -> None:
    if q <= 2:
        raise ValueError(f"q must be > 2, got {q}")


def p_fl(q: int) -> Fraction:
    """Probability that a non-closing 4-chain closes after floor lifting ``2q -> q``."""
    return Fraction(5, 4 * (2 * q - 1))


def p_mod(q: int) -> Fraction:
    return Fraction(1, 2 * q - 1)


# exhaustive tuple enumeration

def _all_chains(q: int) -> ExponentMatrix:
    L0 = 2 * q
    grid = np.indices((L0,) * 4).reshape(4, -1).T
    return ExponentMatrix(grid, L0)


def _closes(entries: np.ndarray, L: int) -> np.ndarray:
    a, b, c, d = entries.T
    return (a - b - c + d) % L == 0


def _conditional(c0: np.ndarray, c1: np.ndarray) -> ConditionalProbabilities:
    return ConditionalProbabilities(
        Fraction(int((c1 & c0).sum()), int(c0.sum())),
        Fraction(int((c1 & ~c0).sum()), int((~c0).sum())),
    )


def brute_force_floor(q: int) -> ConditionalProbabilities:
    """``(Pr(C1 | C0), Pr(C1 | not C0))`` for floor lifting, by full enumeration."""
    _check_q(q)
    chains = _all_chains(q)
    c0 = _closes(chains.entries, 2 * q)
    c1 = _closes(floor_lift(chains, q).entries, q)
    return _conditional(c0, c1)


def brute_force_modulo(q: int) -> ConditionalProbabilities:
    _check_q(q)
    chains = _all_chains(q)
    c0 = _closes(chains.entries, 2 * q)
    c1 = _closes(modulo_lift(chains, q).entries, q)
    return _conditional(c0, c1)


def pair_is_admissible(q: int, r1: int, r2: int) -> tuple[bool, str]:
    L0 = 2 * q
    if r1 == r2:
        return False, "scales are equal"
    for r in (r1, r2):
        if not 0 < r < L0:
            return False, f"scale {r} outside (0, {L0})"
        if gcd(r, L0) != 1:
            return False, f"scale {r} not coprime with {L0}"
    if paired(r1, r2, L0):
        return False, f"{r1} = {r2}*(q+1) mod {L0}"
    return True, ""


def brute_force_fsm_pair(q: int, r1: int, r2: int) -> int:
    """Number of tuples closing under both scales at size ``q`` but not at ``2q``.

    Counts regardless of admissibility (see :func:`pair_is_admissible`), so it
    doubles as a negative control.
    """
    _check_q(q)
    chains = _all_chains(q)
    c0 = _closes(chains.entries, 2 * q)
    c1_r1 = _closes(fsm_lift(chains, q, r1).entries, q)
    c1_r2 = _closes(fsm_lift(chains, q, r2).entries, q)
    return int((c1_r1 & c1_r2 & ~c0).sum())


def cycle_slice_counts(q: int, scales: Sequence[int] | None = None) -> dict[int, int]:
    """``|C1(r) & C0|`` per scale; equal for every scale coprime with ``2q``."""
    _check_q(q)
    chains = _all_chains(q)
    c0 = _closes(chains.entries, 2 * q)
    if scales is None:
        scales = [r for r in range(1, 2 * q) if gcd(r, 2 * q) == 1]
    return {r: int((_closes(fsm_lift(chains, q, r).entries, q) & c0).sum()) for r in scales}


# expectations

def lifted_cycle_expectations(q: int, x: int, y: int) -> tuple[Fraction, Fraction]:
    """Expected number of 4-cycles after floor and modulo lifting ``2q -> q``.

    ``x`` chains close at size ``2q``, ``y`` do not.
    """
    _check_q(q)
    ec_fl = Fraction(3, 4) * x + p_fl(q) * y
    ec_mod = x + p_mod(q) * y
    return ec_fl, ec_mod


def emin_half_binomial(n: int) -> Fraction:
    """``E min(Y, n - Y)`` for ``Y ~ Binomial(n, 1/2)``, by summing over all outcomes."""
    return Fraction(sum(comb(n, k) * min(k, n - k) for k in range(n + 1)), 2**n)


def emin_half_binomial_printed(n: int) -> Fraction:
    """The closed form ``(n/2)(1 - C(n, n//2) / 2^n)``.

    Agrees with :func:`emin_half_binomial` for even ``n`` only; for odd ``n`` it
    overshoots (``n = 1``: 1/4 instead of 0, ``n = 3``: 15/16 instead of 3/4).
    """
    return Fraction(n, 2) * (1 - Fraction(comb(n, n // 2), 2**n))


def _ec_fsml2_sum(q: int, x: int, y: int, inner) -> Fraction:
    _check_q(q)
    p2 = 2 * p_fl(q)
    if p2 > 1:
        raise ValueError(f"2*p_fl = {p2} exceeds 1 for q={q}")
    total = sum(inner(n) * p2**n * (1 - p2) ** (y - n) * comb(y, n) for n in range(y + 1))
    return Fraction(3, 4) * x + total


def ec_fsml2_formula(q: int, x: int, y: int) -> Fraction:
    """The published closed form for two scale values, evaluated exactly."""
    return _ec_fsml2_sum(q, x, y, emin_half_binomial_printed)


def ec_fsml2_conditioned(q: int, x: int, y: int) -> Fraction:
    """Same conditioning on ``X1 + X2 = n``, with ``E min`` computed exactly per ``n``."""
    return _ec_fsml2_sum(q, x, y, emin_half_binomial)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


def model_outcomes(p: Fraction, n_rows: int, y: int,
                   budget: int = ENUMERATION_BUDGET) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """Every outcome ``(X_1, ..., X_{n_rows})`` of the independence model with its probability.

    Each of ``y`` columns lands in row ``i`` with probability ``p`` or in no
    row with probability ``1 - n_rows * p``. Outcomes with the same row counts
    are merged (multinomial weights).
    """
    rest = 1 - n_rows * p
    if rest < 0:
        raise ValueError(f"{n_rows} rows with p={p} exceed total probability 1")
    count = comb(y + n_rows, n_rows)
    if count > budget:
        raise EnumerationBudgetError(f"{count} outcomes exceed the budget of {budget}")
    yfact = factorial(y)
    for xs in _compositions(y, n_rows + 1):
        weight = yfact
        for v in xs:
            weight //= factorial(v)
        yield xs[:-1], weight * p ** (y - xs[-1]) * rest ** xs[-1]


def ec_fsml_exact(q: int, x: int, y: int, n_r: int, budget: int = ENUMERATION_BUDGET) -> Fraction:
    """``3x/4 + E min(X_1, ..., X_{n_r})`` by exhaustive enumeration of the model."""
    _check_q(q)
    e = sum((prob * min(xs) for xs, prob in model_outcomes(p_fl(q), n_r, y, budget)), Fraction(0))
    return Fraction(3, 4) * x + e


def absence_probability_exact(q: int, y: int, n_r: int, p: Fraction | None = None,
                              budget: int = ENUMERATION_BUDGET) -> Fraction:
    """Probability that some row of the model is empty (the best scale leaves no 4-cycle)."""
    _check_q(q)
    p = p_fl(q) if p is None else p
    return sum((prob for xs, prob in model_outcomes(p, n_r, y, budget) if min(xs) == 0), Fraction(0))


def absence_probabilities(q: int, y: int, n_r: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(P_mod, P_fl, P_fsml)``: probability of no 4-cycle after each lifting, closed forms.

    ``P_fsml`` is the inclusion-exclusion sum over the events "row ``i`` empty".
    """
    _check_q(q)
    pf = p_fl(q)
    if n_r * pf > 1:
        raise ValueError(f"n_r * p_fl = {n_r * pf} exceeds 1")
    P_mod = (1 - p_mod(q)) ** y
    P_fl = (1 - pf) ** y
    P_fsml = sum(((-1) ** (k - 1) * comb(n_r, k) * (1 - k * pf) ** y for k in range(1, n_r + 1)),
                 Fraction(0))
    return P_mod, P_fl, P_fsml


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int

    def __str__(self):
        return f"{self.mean:.6f}+-{self.stderr:.6f}"


def ec_fsml_montecarlo(q: int, x: int, y: int, n_r: int, trials: int, seed: int) -> MonteCarloEstimate:
    """Sample ``3x/4 + min_i X_i`` from the model with numpy's PCG64 seeded by ``seed``."""
    _check_q(q)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pf = float(p_fl(q))
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(y, [pf] * n_r + [1.0 - n_r * pf], size=trials)
    samples = 0.75 * x + draws[:, :n_r].min(axis=1)
    stderr = float(samples.std(ddof=1) / sqrt(trials)) if trials > 1 else 0.0
    return MonteCarloEstimate(float(samples.mean()), stderr, trials)


# binomial identity

def alternating_binomial_sum(n: int, coeffs: Sequence[int]) -> int:
    """``sum_k (-1)^k C(n, k) g(k)`` for ``g(k) = sum_i coeffs[i] k^i``."""
    def g(k):
        return sum(c * k**i for i, c in enumerate(coeffs))

    return sum((-1) ** k * comb(n, k) * g(k) for k in range(n + 1))


def alternating_binomial_vanishes(n: int, coeffs: Sequence[int]) -> bool:
    """True iff the alternating binomial sum of ``g`` vanishes (expected when ``deg g < n``)."""
    return alternating_binomial_sum(n, coeffs) == 0


# aggregate report

@dataclass(frozen=True)
class TheoryParams:
    q: int
    n_r: int = 2
    x: int = 0
    y: int = 0
    trials: int = 100_000
    seed: int = 0

    def __post_init__(self):
        _check_q(self.q)
        if self.n_r < 1 or self.x < 0 or self.y < 0:
            raise ValueError("need n_r >= 1 and x, y >= 0")


@dataclass(frozen=True)
class TheoryReport:
    params: TheoryParams
    p_fl: Fraction
    p_mod: Fraction
    floor: ConditionalProbabilities
    modulo: ConditionalProbabilities
    ec_fl: Fraction
    ec_mod: Fraction
    ec_fsml2: Fraction
    ec_fsml_exact: Fraction | None
    P_mod: Fraction
    P_fl: Fraction
    P_fsml: Fraction
    ec_fsml_mc: MonteCarloEstimate | None

    def lines(self) -> list[str]:
        out = [f"{name}={value}" for name, value in [
            ("q", self.params.q), ("n_r", self.params.n_r), ("x", self.params.x), ("y", self.params.y),
            ("p_fl", self.p_fl), ("p_mod", self.p_mod),
            ("floor", self.floor), ("modulo", self.modulo),
            ("EC_fl", self.ec_fl), ("EC_mod", self.ec_mod), ("EC_fsml2_formula", self.ec_fsml2),
            ("EC_fsml_exact", self.ec_fsml_exact), ("P_mod", self.P_mod), ("P_fl", self.P_fl),
            ("P_fsml", self.P_fsml), ("EC_fsml_mc", self.ec_fsml_mc),
        ]]
        return out


def theory_report(params: TheoryParams, monte_carlo: bool = False) -> TheoryReport:
    q, n_r, x, y = params.q, params.n_r, params.x, params.y
    ec_fl, ec_mod = lifted_cycle_expectations(q, x, y)
    try:
        exact = ec_fsml_exact(q, x, y, n_r)
    except EnumerationBudgetError:
        exact = None
    P_mod, P_fl, P_fsml = absence_probabilities(q, y, n_r)
    mc = ec_fsml_montecarlo(q, x, y, n_r, params.trials, params.seed) if monte_carlo else None
    return TheoryReport(
        params, p_fl(q), p_mod(q), brute_force_floor(q), brute_force_modulo(q),
        ec_fl, ec_mod, ec_fsml2_formula(q, x, y), exact, P_mod, P_fl, P_fsml, mc,
    )
