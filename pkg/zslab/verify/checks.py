#!/usr/bin/env python3
"""
Verification Checks
Desk-scale executable checks of the structural results on zero-sum
invariants. Every check returns a CheckReport; none raises for cap or
hypothesis problems.

Status conventions:
- skipped_cap: a size cap would be exceeded (the cap is named in details)
- skipped_hypothesis: the theorem's precondition does not hold for the parameters
- error: a lemma was requested for a group violating the lemma's hypothesis
"""

import inspect
import random
import time
from fractions import Fraction
from functools import wraps
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, List

from zslab.constants import (
    DEFAULT_CONJECTURE_LEN_CAP,
    DEFAULT_CONJECTURE_SAMPLES,
    DEFAULT_SEED,
    EXTENDED_GROUP_CAP,
)
from zslab.exceptions import CapExceededError, PreconditionError
from zslab.factorization.factor import count_factorizations, divides_ufis, is_ufis
from zslab.groups.group import (
    GroupSpec,
    abelian_groups,
    check_quotient_hypothesis,
    cyclic,
    direct_sum,
    elementary,
    subgroup_h,
)
from zslab.groups.primes import is_prime, p_minus
from zslab.groups.validators import validate_group_cap
from zslab.invariants.formulas import K1_star, K_star, k_star
from zslab.invariants.solvers import DenseKind
from zslab.invariants.wideness import is_2wide, is_2wide_integer, is_wide, is_wide_integer
from zslab.observability.logger import get_logger
from zslab.observability.metrics import get_metrics
from zslab.sequences.sequence import Sequence, order_histogram, restrict, sigma
from zslab.sequences.weights import DYADIC
from zslab.services.solver_service import SolverService, get_solver_service
from zslab.sumsets.sumset import (
    iter_zero_sum_free,
    random_zero_sum_free,
    subset_sum_counts,
    sumset_mask,
)
from zslab.verify.report import CheckReport, CheckStatus

logger = get_logger(__name__)

CHECKS: Dict[str, Callable[..., CheckReport]] = {}

MAX_REPORTED_WITNESSES = 5


def register(check_id: str):
    """
    Register a check under its id and wrap it with timing, cap and
    hypothesis handling, metrics and the check_finished event.
    """
    def decorator(fn):
        signature = inspect.signature(fn)

        @wraps(fn)
        def wrapper(*args, **kwargs) -> CheckReport:
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            params = dict(bound.arguments)

            start = time.perf_counter()
            try:
                report = fn(*args, **kwargs)
            except CapExceededError as e:
                report = _outcome(
                    CheckStatus.SKIPPED_CAP, cap=e.cap_name, limit=e.limit, actual=e.actual
                )
            except PreconditionError as e:
                report = _outcome(CheckStatus.ERROR, reason=str(e))

            report.check_id = check_id
            report.params = params
            report.elapsed_ms = (time.perf_counter() - start) * 1000

            get_metrics().record_check(report.status.value, report.elapsed_ms)
            logger.info(
                "check_finished",
                check_id=check_id,
                status=report.status.value,
                elapsed_ms=round(report.elapsed_ms, 2),
            )
            return report

        CHECKS[check_id] = wrapper
        return wrapper
    return decorator


def _outcome(status: CheckStatus, lhs=None, rhs=None, witnesses=None, nodes: int = 0, **details) -> CheckReport:
    return CheckReport(
        check_id="",
        params={},
        status=status,
        value_lhs=lhs,
        value_rhs=rhs,
        witnesses=list(witnesses or [])[:MAX_REPORTED_WITNESSES],
        details=details,
        nodes_explored=nodes,
    )


def _equality(lhs: Fraction, rhs: Fraction, witnesses, nodes: int, **details) -> CheckReport:
    status = CheckStatus.PASS if lhs == rhs else CheckStatus.FAIL
    return _outcome(status, lhs, rhs, witnesses, nodes, **details)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def _dense_kinds(kind: str) -> List[DenseKind]:
    if kind == "both":
        return [DenseKind.ZSF, DenseKind.UFIS]
    return [DenseKind(kind)]


def _count_of_order(S: Sequence, ell: int) -> int:
    return order_histogram(S).get(ell, 0)


# ==================== CROSS NUMBER BOUNDS ====================

@register("k_bounds")
def check_k_bounds(group: GroupSpec) -> CheckReport:
    """k(G) + 1/exp(G) ≤ K(G) ≤ k(G) + 1/P⁻(exp(G))"""
    if group.exponent == 1:
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, reason="no prime divides exp(G)")

    svc = get_solver_service()
    little, big = svc.little_k(group), svc.big_K(group)
    lower = little.value + Fraction(1, group.exponent)
    upper = little.value + Fraction(1, p_minus(group.exponent))
    ok = lower <= big.value <= upper
    return _outcome(
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        big.value,
        upper,
        [little.witness, big.witness],
        little.nodes_explored + big.nodes_explored,
        k=little.value,
        K=big.value,
        lower=lower,
        upper=upper,
    )


# ==================== DENSE STRUCTURE ====================

def _amalgamation_primes(group: GroupSpec, ell: int) -> List[int]:
    """Primes p for which H_ℓ / H_{ℓ/p} is cyclic of order p"""
    primes = []
    for p in group.primes:
        try:
            check_quotient_hypothesis(group, ell, p)
        except PreconditionError:
            continue
        primes.append(p)
    return primes


@register("amalgamation")
def check_amalgamation_lemma(group: GroupSpec, ell: int, kind: str = "both") -> CheckReport:
    """
    Every dense zero-sum free sequence has at most p − 1 terms of order ℓ,
    every dense UFIS at most p, for each prime p with α_{p,1} > α_{p,2}
    and p^{α_{p,2}+1} | ℓ.
    """
    if ell < 1:
        raise PreconditionError(f"ell must be >= 1, got {ell}")
    if group.exponent % ell != 0:
        raise PreconditionError(
            f"Exponent mismatch: ell={ell} does not divide exp({group})={group.exponent}, "
            f"no element has order {ell}"
        )
    primes = _amalgamation_primes(group, ell)
    if not primes:
        raise PreconditionError(
            f"No prime of {group} has alpha_1 > alpha_2 with p^(alpha_2 + 1) | {ell}"
        )

    svc = get_solver_service()
    violations, nodes, summary = [], 0, {}
    for dense_kind in _dense_kinds(kind):
        result = svc.dense(group, dense_kind)
        nodes += result.nodes_explored
        slack = 0 if dense_kind == DenseKind.ZSF else 1
        limit = min(primes) - 1 + slack
        counts = [_count_of_order(S, ell) for S in result.optima]
        violations.extend(S for S, c in zip(result.optima, counts) if c > limit)
        summary[dense_kind.value] = {
            "dense_sequences": len(result.optima),
            "max_count": max(counts),
            "limit": limit,
        }

    return _outcome(
        CheckStatus.FAIL if violations else CheckStatus.PASS,
        witnesses=violations,
        nodes=nodes,
        primes=primes,
        kinds=summary,
    )


@register("lemma4")
def check_lemma4(group: GroupSpec, kind: str = "both") -> CheckReport:
    """
    With p₁ the smallest prime and α_{1,1} > α_{1,2}: every dense sequence
    has at least p₁ − 1 terms of order p₁^a for a in [α_{1,2}+1, α_{1,1}],
    given p₁ ≺ (zero-sum free) or p₁ ≺₂ (UFIS) the rest of the exponent.
    """
    if not group.primes:
        raise PreconditionError("The trivial group has no smallest prime")
    p1 = group.primes[0]
    exps = group.p_exponents(p1)
    alpha11, alpha12 = exps[0], (exps[1] if len(exps) > 1 else 0)
    if alpha11 <= alpha12:
        raise PreconditionError(f"Hypothesis fails: alpha_11={alpha11} <= alpha_12={alpha12}")

    rest = group.exponent // p1 ** alpha11
    hypotheses = {
        DenseKind.ZSF: is_wide(p1, rest),
        DenseKind.UFIS: is_2wide(p1, rest),
    }
    requested = _dense_kinds(kind)
    kinds = [k for k in requested if hypotheses[k].holds]
    if not kinds:
        raise PreconditionError(f"Hypothesis fails: {p1} is not wide enough for {rest}")

    svc = get_solver_service()
    orders = [p1 ** a for a in range(alpha12 + 1, alpha11 + 1)]
    violations, nodes, summary = [], 0, {}
    for dense_kind in kinds:
        result = svc.dense(group, dense_kind)
        nodes += result.nodes_explored
        minima = {ell: min(_count_of_order(S, ell) for S in result.optima) for ell in orders}
        violations.extend(
            S for S in result.optima if any(_count_of_order(S, ell) < p1 - 1 for ell in orders)
        )
        summary[dense_kind.value] = {"dense_sequences": len(result.optima), "min_counts": minima}

    return _outcome(
        CheckStatus.FAIL if violations else CheckStatus.PASS,
        witnesses=violations,
        nodes=nodes,
        p1=p1,
        required=p1 - 1,
        kinds=summary,
        hypothesis_skipped=[k.value for k in requested if k not in kinds],
    )


# ==================== ADDITIVITY ====================

@register("additivity_k")
def check_additivity_k(p: int, alpha: int, group: GroupSpec) -> CheckReport:
    """k(C_{p^α} ⊕ G) = k(C_{p^α}) + k(G) when p ≺ exp(G)"""
    _require_prime(p)
    wide = is_wide(p, group.exponent)
    if not wide.holds:
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, wideness=wide.to_dict())

    svc = get_solver_service()
    head = cyclic(p ** alpha)
    whole, left, right = svc.little_k(direct_sum(head, group)), svc.little_k(head), svc.little_k(group)
    return _equality(
        whole.value,
        left.value + right.value,
        [whole.witness],
        whole.nodes_explored + left.nodes_explored + right.nodes_explored,
        k_head=left.value,
        k_tail=right.value,
    )


@register("additivity_K1")
def check_additivity_K1(p: int, alpha: int, group: GroupSpec) -> CheckReport:
    """K₁(C_{p^α} ⊕ G) = K₁(C_{p^α}) + K₁(G) when p ≺₂ exp(G)"""
    _require_prime(p)
    wide = is_2wide(p, group.exponent)
    if not wide.holds:
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, wideness=wide.to_dict())

    svc = get_solver_service()
    head = cyclic(p ** alpha)
    whole, left, right = svc.K1(direct_sum(head, group)), svc.K1(head), svc.K1(group)
    return _equality(
        whole.value,
        left.value + right.value,
        [whole.witness],
        whole.nodes_explored + left.nodes_explored + right.nodes_explored,
        K1_head=left.value,
        K1_tail=right.value,
    )


@register("toplift")
def check_toplift(p: int, alphas: List[int]) -> CheckReport:
    """K₁(C_{p^{α₁+1}} ⊕ …) = K₁(C_{p^{α₁}} ⊕ …) + 1/p^{α₁}"""
    _require_prime(p)
    alphas = list(alphas)
    if not alphas or min(alphas) < 1 or alphas[0] < max(alphas):
        return _outcome(
            CheckStatus.SKIPPED_HYPOTHESIS,
            reason="alphas must be positive with the first one maximal",
        )

    svc = get_solver_service()
    base = GroupSpec.from_orders(p ** a for a in alphas)
    lifted = GroupSpec.from_orders([p ** (alphas[0] + 1)] + [p ** a for a in alphas[1:]])
    top, bottom = svc.K1(lifted), svc.K1(base)
    return _equality(
        top.value,
        bottom.value + Fraction(1, p ** alphas[0]),
        [top.witness, bottom.witness],
        top.nodes_explored + bottom.nodes_explored,
        K1_base=bottom.value,
    )


@register("weighted_additivity")
def check_weighted_additivity(p: int, alpha: int, group: GroupSpec) -> CheckReport:
    """
    k(C_{p^α} ⊕ G, f) = k(C_{p^α}, f) + k(G, f) and likewise for K₁, with
    f the dyadic weight, when p < P⁻(exp(G)).
    """
    _require_prime(p)
    if group.exponent == 1 or p >= p_minus(group.exponent):
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, reason=f"{p} is not below P-(exp(G))")

    svc = get_solver_service()
    head = cyclic(p ** alpha)
    whole = direct_sum(head, group)
    k_whole, k_head, k_tail = (svc.little_k(g, DYADIC) for g in (whole, head, group))
    K1_whole, K1_head, K1_tail = (svc.K1(g, DYADIC) for g in (whole, head, group))

    k_rhs = k_head.value + k_tail.value
    K1_rhs = K1_head.value + K1_tail.value
    ok = k_whole.value == k_rhs and K1_whole.value == K1_rhs
    return _outcome(
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        k_whole.value,
        k_rhs,
        [k_whole.witness, K1_whole.witness],
        sum(r.nodes_explored for r in (k_whole, k_head, k_tail, K1_whole, K1_head, K1_tail)),
        K1_lhs=K1_whole.value,
        K1_rhs=K1_rhs,
    )


# ==================== UFIS OVER ELEMENTARY GROUPS ====================

@register("eq6")
def check_eq6_and_oddcount(p: int, n: int) -> CheckReport:
    """
    For a maximal-length UFIS S = U₁⋯U_t over C_p^n: Π|U_i| ≤ p^n.

    The claim that at least |S| − n(p−1) blocks have odd length is evaluated
    literally and reported alongside; it does not affect the status.
    """
    _require_prime(p)
    svc = get_solver_service()
    group = elementary(p, n)
    result = svc.narkiewicz(group)
    S = result.witness

    factorization = count_factorizations(S, svc.caps)
    lengths = sorted(len(U) for U in factorization.witness)
    product_of_lengths = 1
    for L in lengths:
        product_of_lengths *= L
    odd_blocks = sum(1 for L in lengths if L % 2 == 1)
    odd_bound = len(S) - n * (p - 1)

    return _outcome(
        CheckStatus.PASS if product_of_lengths <= p ** n else CheckStatus.FAIL,
        Fraction(product_of_lengths),
        Fraction(p ** n),
        [S],
        result.nodes_explored,
        block_lengths=lengths,
        odd_blocks=odd_blocks,
        odd_bound=odd_bound,
        odd_claim_holds=odd_blocks >= odd_bound,
    )


@register("gao_n1")
def check_gao_n1(p: int, n: int) -> CheckReport:
    """N₁(C_p^n) = n·p"""
    _require_prime(p)
    result = get_solver_service().narkiewicz(elementary(p, n))
    return _equality(result.value, Fraction(n * p), [result.witness], result.nodes_explored)


# ==================== CONJECTURES ====================

def _unique_short_subsum(T: Sequence, p: int, cap: int) -> bool:
    """
    Some nonempty T₀ | T with |T₀| < p is the only labeled subsequence of T
    with sum σ(T₀). Such a T₀ takes every copy of each element it uses.
    """
    counts = subset_sum_counts(T, cap)
    support = T.items
    for r in range(1, len(support) + 1):
        for block in combinations(support, r):
            if sum(m for _, m in block) >= p:
                continue
            if counts[sigma(Sequence.from_pairs(T.group, block)).index] == 1:
                return True
    return False


def _isolated_cyclic_subgroup(T: Sequence, p: int, cap: int) -> bool:
    """Some H = ⟨g⟩, g | T, misses Σ(T·T_H⁻¹)"""
    G = T.group
    for g, _ in T.items:
        multiples, x = {0}, g
        while x != 0:
            multiples.add(x)
            x = int(G.add_table[x, g])
        outside = restrict(T, lambda h: h.index not in multiples)
        reach = sumset_mask(outside, cap)
        if not any(reach[h] for h in multiples):
            return True
    return False


def _conjecture_sweep(
    p: int,
    k: int,
    len_cap: int,
    samples: int,
    seed: int,
    predicate: Callable[[Sequence, int, int], bool],
) -> CheckReport:
    _require_prime(p)
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    group = elementary(p, k)
    cap = get_solver_service().caps.group_cap
    validate_group_cap(group, cap)

    counterexamples, exhaustive = [], 0
    for T in iter_zero_sum_free(group, len_cap, cap):
        exhaustive += 1
        if not predicate(T, p, cap):
            counterexamples.append(T)

    sampled = 0
    longest = k * (p - 1)
    if samples and len_cap < longest:
        rng = random.Random(seed)
        for _ in range(samples):
            T = random_zero_sum_free(group, rng, longest, cap)
            if len(T) <= len_cap:
                continue
            sampled += 1
            if not predicate(T, p, cap):
                counterexamples.append(T)

    if counterexamples:
        logger.warning("conjecture_counterexample", group=str(group), witness=repr(counterexamples[0]))
    return _outcome(
        CheckStatus.FAIL if counterexamples else CheckStatus.PASS,
        witnesses=counterexamples,
        exhaustive=True,
        exhaustive_checked=exhaustive,
        exhaustive_len_cap=len_cap,
        sampled_checked=sampled,
        counterexamples=len(counterexamples),
    )


@register("conj5")
def check_conjecture5(
    p: int,
    k: int,
    len_cap: int = DEFAULT_CONJECTURE_LEN_CAP,
    samples: int = DEFAULT_CONJECTURE_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> CheckReport:
    """Every zero-sum free T over C_p^k has a short subsequence with a unique sum"""
    return _conjecture_sweep(p, k, len_cap, samples, seed, _unique_short_subsum)


@register("conj6")
def check_conjecture6(
    p: int,
    k: int,
    len_cap: int = DEFAULT_CONJECTURE_LEN_CAP,
    samples: int = DEFAULT_CONJECTURE_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> CheckReport:
    """Every zero-sum free T over C_p^k has a cyclic H with T_H ≠ 1 and H ∩ Σ(T·T_H⁻¹) = ∅"""
    return _conjecture_sweep(p, k, len_cap, samples, seed, _isolated_cyclic_subgroup)


@register("conjectures_12")
def check_conjectures_12(group: GroupSpec) -> CheckReport:
    """k(G) = k*(G), K(G) = K*(G) and K₁(G) = K₁*(G)"""
    svc = get_solver_service()
    little, big, k1 = svc.little_k(group), svc.big_K(group), svc.K1(group)
    values = {
        "k": (little.value, k_star(group)),
        "K": (big.value, K_star(group)),
        "K1": (k1.value, K1_star(group)),
    }
    ok = all(solved == formula for solved, formula in values.values())
    return _outcome(
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        little.value,
        k_star(group),
        [little.witness, big.witness, k1.witness],
        little.nodes_explored + big.nodes_explored + k1.nodes_explored,
        values={name: {"solved": s, "formula": f} for name, (s, f) in values.items()},
    )


@register("twoprime")
def check_twoprime(p: int, alpha: int, q: int, beta: int) -> CheckReport:
    """K₁(C_p ⊕ C_{p^α} ⊕ C_{q^β}) = K₁* for distinct primes p, q"""
    _require_prime(p)
    _require_prime(q)
    if p == q or alpha < 1 or beta < 1:
        raise PreconditionError("Need distinct primes and positive exponents")

    base = get_solver_service()
    extended = SolverService(
        base.config.model_copy(update={"group_cap": max(EXTENDED_GROUP_CAP, base.caps.group_cap)})
    )
    group = GroupSpec.from_orders([p, p ** alpha, q ** beta])
    result = extended.K1(group)
    return _equality(result.value, K1_star(group), [result.witness], result.nodes_explored)


@register("wide_cyclic")
def check_wide_cyclic(n: int) -> CheckReport:
    """k(C_n) = k*(C_n) for wide n and K₁(C_n) = K₁*(C_n) for 2-wide n"""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    wide, two_wide = is_wide_integer(n), is_2wide_integer(n)
    if not (wide or two_wide):
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, reason=f"{n} is neither wide nor 2-wide")

    svc = get_solver_service()
    group = cyclic(n)
    comparisons, witnesses, nodes = {}, [], 0
    if wide:
        r = svc.little_k(group)
        comparisons["k"] = (r.value, k_star(group))
        witnesses.append(r.witness)
        nodes += r.nodes_explored
    if two_wide:
        r = svc.K1(group)
        comparisons["K1"] = (r.value, K1_star(group))
        witnesses.append(r.witness)
        nodes += r.nodes_explored

    lhs, rhs = next(iter(comparisons.values()))
    ok = all(s == f for s, f in comparisons.values())
    return _outcome(
        CheckStatus.PASS if ok else CheckStatus.FAIL,
        lhs,
        rhs,
        witnesses,
        nodes,
        wide=wide,
        two_wide=two_wide,
        values={name: {"solved": s, "formula": f} for name, (s, f) in comparisons.items()},
    )


@register("full_sumset")
def check_full_sumset(p: int, alpha: int, group: GroupSpec) -> CheckReport:
    """
    In every dense zero-sum free sequence over C_{p^α} ⊕ G with p ≺ exp(G),
    the terms of p-power order have full sumset in the p-component.
    """
    _require_prime(p)
    wide = is_wide(p, group.exponent)
    if not wide.holds:
        return _outcome(CheckStatus.SKIPPED_HYPOTHESIS, wideness=wide.to_dict())

    svc = get_solver_service()
    whole = direct_sum(cyclic(p ** alpha), group)
    result = svc.dense(whole, DenseKind.ZSF)
    top = p ** whole.p_exponents(p)[0]
    component = [g.index for g in subgroup_h(whole, top, svc.caps.group_cap) if not g.is_zero]

    misses = []
    for S in result.optima:
        p_part = restrict(S, lambda g: top % int(whole.order_table[g.index]) == 0)
        reach = sumset_mask(p_part, svc.caps.group_cap)
        if not all(reach[i] for i in component):
            misses.append(S)

    return _outcome(
        CheckStatus.FAIL if misses else CheckStatus.PASS,
        witnesses=misses,
        nodes=result.nodes_explored,
        dense_sequences=len(result.optima),
        component_order=top,
    )


# ==================== CRITERION ORACLE ====================

def _extension(S: Sequence) -> Sequence:
    s = sigma(S)
    if s.is_zero:
        return S
    return Sequence.from_pairs(S.group, S.items + (((-s).index, 1),))


@register("lemma3_oracle")
def check_lemma3_oracle(max_order: int, max_len: int) -> CheckReport:
    """
    divides_ufis agrees with "the −σ extension is a UFIS" on every multiset
    of length ≤ max_len over every group of order ≤ max_order.
    """
    caps = get_solver_service().caps
    if max_len + 1 > caps.oracle_len_cap:
        raise CapExceededError("oracle_len_cap", caps.oracle_len_cap, max_len + 1)

    disagreements, checked, groups = [], 0, 0
    for n in range(1, max_order + 1):
        for group in abelian_groups(n):
            validate_group_cap(group, caps.group_cap)
            groups += 1
            for L in range(max_len + 1):
                for combo in combinations_with_replacement(range(1, n), L):
                    S = Sequence.from_indices(group, combo)
                    checked += 1
                    if divides_ufis(S, caps) != is_ufis(_extension(S), caps):
                        disagreements.append(S)

    return _outcome(
        CheckStatus.FAIL if disagreements else CheckStatus.PASS,
        witnesses=disagreements,
        groups_checked=groups,
        multisets_checked=checked,
        disagreements=len(disagreements),
    )
