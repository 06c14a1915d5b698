#!/usr/bin/env python3
"""
Finite Abelian Groups
Canonical prime-power decomposition, element arithmetic, subgroups H_k
and the cyclic quotient H_ℓ → C_p.

Elements are mixed-radix coordinate vectors. The linear index ranks them
with the first coordinate most significant, so index order equals
itertools.product order.
"""

from dataclasses import dataclass, field
from functools import cached_property, reduce, total_ordering
from itertools import product
from math import gcd, lcm, prod
from typing import Dict, Iterable, List, Tuple

import numpy as np
from sympy.utilities.iterables import partitions

from zslab.constants import DEFAULT_GROUP_CAP
from zslab.exceptions import GroupParseError, PreconditionError
from zslab.groups.primes import factorize, is_prime, prime_power_base, prime_power_parts, valuation
from zslab.groups.validators import (
    validate_components,
    validate_coords,
    validate_group_cap,
    validate_same_group,
)


def _canonical_key(q: int) -> Tuple[int, int]:
    p, a = prime_power_base(q)
    return (p, -a)


@dataclass(frozen=True)
class GroupSpec:
    """
    A finite abelian group C_{q_1} ⊕ ... ⊕ C_{q_m} with every q_j a prime
    power, sorted by prime ascending and exponent descending within a prime.
    """

    components: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(q) for q in self.components))
        validate_components(self.components)

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "GroupSpec":
        """Direct sum of cyclic groups of the given orders (CRT split, sorted)"""
        parts: List[int] = []
        for n in orders:
            if n < 1:
                raise GroupParseError(f"Invalid cyclic order {n}: must be >= 1")
            parts.extend(prime_power_parts(n))
        return cls(tuple(sorted(parts, key=_canonical_key)))

    def __str__(self) -> str:
        if not self.components:
            return "C1"
        return "⊕".join(f"C{q}" for q in self.components)

    @property
    def rank(self) -> int:
        return len(self.components)

    @cached_property
    def order(self) -> int:
        return prod(self.components)

    @cached_property
    def exponent(self) -> int:
        return reduce(lcm, self.components, 1)

    @cached_property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in factorize(self.exponent))

    def p_exponents(self, p: int) -> Tuple[int, ...]:
        """Exponents α_{p,1} ≥ α_{p,2} ≥ ... of the p-components"""
        return tuple(prime_power_base(q)[1] for q in self.components if q % p == 0)

    def p_component_indices(self, p: int) -> Tuple[int, ...]:
        return tuple(j for j, q in enumerate(self.components) if q % p == 0)

    # ==================== ELEMENT ADDRESSING ====================

    @cached_property
    def _radix_weights(self) -> Tuple[int, ...]:
        weights = []
        w = 1
        for n in reversed(self.components):
            weights.append(w)
            w *= n
        return tuple(reversed(weights))

    def index_of(self, coords: Tuple[int, ...]) -> int:
        """Mixed-radix linear index of a coordinate vector"""
        return sum(x * w for x, w in zip(coords, self._radix_weights))

    def coords_of(self, index: int) -> Tuple[int, ...]:
        coords = []
        for n, w in zip(self.components, self._radix_weights):
            coords.append((index // w) % n)
        return tuple(coords)

    def element(self, coords: Iterable[int]) -> "GroupElement":
        return GroupElement(self, tuple(int(x) for x in coords))

    def from_index(self, index: int) -> "GroupElement":
        return GroupElement(self, self.coords_of(index))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    # ==================== TABLES ====================
    # Dense lookup tables addressed by linear index. Built lazily; only
    # solver-facing code touches them, and callers check the group cap first.

    @cached_property
    def coord_matrix(self) -> np.ndarray:
        """(|G|, rank) array of coordinates in index order"""
        if not self.components:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.unravel_index(np.arange(self.order), self.components)
        return np.stack(grids, axis=1).astype(np.int64)

    def _ravel(self, coords: np.ndarray) -> np.ndarray:
        if not self.components:
            return np.zeros(coords.shape[:-1], dtype=np.int64)
        return np.asarray(np.ravel_multi_index(tuple(np.moveaxis(coords, -1, 0)), self.components))

    @cached_property
    def add_table(self) -> np.ndarray:
        """add_table[a, b] = index of a + b"""
        radix = np.array(self.components, dtype=np.int64)
        c = self.coord_matrix
        summed = (c[:, None, :] + c[None, :, :]) % radix if self.components else c[:, None, :]
        return self._ravel(summed).astype(np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        radix = np.array(self.components, dtype=np.int64)
        c = self.coord_matrix
        return self._ravel((-c) % radix if self.components else c).astype(np.int64)

    @cached_property
    def order_table(self) -> np.ndarray:
        """order_table[a] = order of the element with index a"""
        if not self.components:
            return np.ones(1, dtype=np.int64)
        radix = np.array(self.components, dtype=np.int64)
        per_coord = radix // np.gcd(radix, self.coord_matrix)
        return np.lcm.reduce(per_coord, axis=1).astype(np.int64)


@total_ordering
@dataclass(frozen=True)
class GroupElement:
    """Coordinate vector over the components of a GroupSpec"""

    group: GroupSpec
    coords: Tuple[int, ...]

    def __post_init__(self):
        validate_coords(self.group.components, self.coords)

    @property
    def index(self) -> int:
        return self.group.index_of(self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __lt__(self, other: "GroupElement") -> bool:
        validate_same_group(self, other)
        return self.index < other.index

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __neg__(self) -> "GroupElement":
        return neg(self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return add(self, neg(other))

    def __rmul__(self, m: int) -> "GroupElement":
        return smul(m, self)

    def __repr__(self) -> str:
        return f"({','.join(map(str, self.coords))})"


# ==================== PARSING ====================

def parse_group(text: str) -> GroupSpec:
    """
    Parse a comma-separated list of cyclic orders, e.g. "4,3" or "6".

    Whitespace around tokens is ignored; "1" is the trivial group.
    """
    if text is None or not str(text).strip():
        raise GroupParseError("Empty group specification")

    orders = []
    for token in str(text).split(","):
        token = token.strip()
        try:
            n = int(token, 10)
        except ValueError:
            raise GroupParseError(f"Non-numeric order {token!r} in group spec {text!r}") from None
        if n < 1:
            raise GroupParseError(f"Invalid cyclic order {n}: must be >= 1")
        orders.append(n)
    return GroupSpec.from_orders(orders)


def format_group(group: GroupSpec) -> str:
    """Inverse of parse_group on canonical specs"""
    return ",".join(map(str, group.components)) or "1"


def cyclic(n: int) -> GroupSpec:
    return GroupSpec.from_orders([n])


def elementary(p: int, n: int) -> GroupSpec:
    """C_p^n"""
    return GroupSpec.from_orders([p] * n)


def direct_sum(*groups: GroupSpec) -> GroupSpec:
    return GroupSpec.from_orders([q for g in groups for q in g.components])


# ==================== ARITHMETIC ====================

def add(a: GroupElement, b: GroupElement) -> GroupElement:
    validate_same_group(a, b)
    comps = a.group.components
    return GroupElement(a.group, tuple((x + y) % n for x, y, n in zip(a.coords, b.coords, comps)))


def neg(a: GroupElement) -> GroupElement:
    comps = a.group.components
    return GroupElement(a.group, tuple((-x) % n for x, n in zip(a.coords, comps)))


def smul(m: int, a: GroupElement) -> GroupElement:
    comps = a.group.components
    return GroupElement(a.group, tuple((m * x) % n for x, n in zip(a.coords, comps)))


def order(g: GroupElement) -> int:
    """Least m >= 1 with m·g = 0"""
    return reduce(lcm, (n // gcd(n, x) for x, n in zip(g.coords, g.group.components)), 1)


def exponent(group: GroupSpec) -> int:
    return group.exponent


# ==================== ENUMERATION ====================

def elements(group: GroupSpec, cap: int = DEFAULT_GROUP_CAP) -> List[GroupElement]:
    """All elements in linear-index order"""
    validate_group_cap(group, cap)
    return [GroupElement(group, c) for c in product(*(range(n) for n in group.components))]


def nonzero_elements(group: GroupSpec, cap: int = DEFAULT_GROUP_CAP) -> List[GroupElement]:
    """G•"""
    return elements(group, cap)[1:]


def subgroup_h(group: GroupSpec, k: int, cap: int = DEFAULT_GROUP_CAP) -> List[GroupElement]:
    """H_k = { g : order(g) | k }"""
    if k < 1:
        raise PreconditionError(f"subgroup_h requires k >= 1, got {k}")
    return [g for g in elements(group, cap) if k % order(g) == 0]


def quotient_to_cp(
    group: GroupSpec,
    ell: int,
    p: int,
    cap: int = DEFAULT_GROUP_CAP,
) -> Dict[GroupElement, int]:
    """
    The projection H_ℓ → C_p with kernel H_{ℓ/p}.

    Reads the coordinate of the unique p-component of maximal exponent α1,
    divided by p^{α1 - v_p(ℓ)}, modulo p.
    """
    check_quotient_hypothesis(group, ell, p)

    j0 = group.p_component_indices(p)[0]
    alpha1 = group.p_exponents(p)[0]
    scale = p ** (alpha1 - valuation(ell, p))
    return {g: (g.coords[j0] // scale) % p for g in subgroup_h(group, ell, cap)}


def check_quotient_hypothesis(group: GroupSpec, ell: int, p: int) -> None:
    """Raise PreconditionError unless H_ℓ / H_{ℓ/p} is cyclic of order p"""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if ell < 1 or ell % p != 0:
        raise PreconditionError(f"p={p} does not divide ell={ell}")
    if group.exponent % ell != 0:
        raise PreconditionError(
            f"Exponent mismatch: ell={ell} does not divide exp(G)={group.exponent}, so H_ell = G"
        )

    exps = group.p_exponents(p)
    alpha1 = exps[0]
    alpha2 = exps[1] if len(exps) > 1 else 0
    if alpha1 <= alpha2:
        raise PreconditionError(
            f"Quotient not cyclic: the {p}-component has alpha_1={alpha1} <= alpha_2={alpha2}"
        )
    if ell % p ** (alpha2 + 1) != 0:
        raise PreconditionError(f"Quotient not cyclic: {p}^{alpha2 + 1} does not divide ell={ell}")


# ==================== STRUCTURE ====================

def invariant_factors(group: GroupSpec) -> List[int]:
    """Invariant factors d_1 | d_2 | ... | d_m (trivial group → [])"""
    columns = [group.p_exponents(p) for p in group.primes]
    m = max((len(c) for c in columns), default=0)
    largest_first = [
        prod(p ** c[j] for p, c in zip(group.primes, columns) if j < len(c))
        for j in range(m)
    ]
    return list(reversed(largest_first))


def abelian_groups(n: int) -> List[GroupSpec]:
    """Every abelian group of order n up to isomorphism, in a fixed order"""
    if n < 1:
        raise PreconditionError(f"Group order must be >= 1, got {n}")

    per_prime = []
    for p, a in factorize(n):
        options = []
        for part in partitions(a):
            exps = sorted((k for k, m in part.items() for _ in range(m)), reverse=True)
            options.append(tuple(p ** e for e in exps))
        per_prime.append(sorted(options))
    return [GroupSpec(tuple(q for block in combo for q in block)) for combo in product(*per_prime)]
