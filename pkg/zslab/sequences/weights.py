#!/usr/bin/env python3
"""
Weight Functions
Maps an element order to an exact rational weight.

- cross:  1/n (the cross number)
- length: 1 (the length)
- dyadic: totally multiplicative, f(p_i) = 1/2^i on the i-th prime
- custom: explicit order → weight table
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from zslab.exceptions import WeightError
from zslab.groups.primes import factorize, prime_index

WEIGHT_KINDS = ("cross", "length", "dyadic", "custom")


@lru_cache(maxsize=1024)
def _dyadic(n: int) -> Fraction:
    value = Fraction(1)
    for p, a in factorize(n):
        value *= Fraction(1, 2 ** prime_index(p)) ** a
    return value


@dataclass(frozen=True)
class WeightFunction:
    kind: str = "cross"
    table: Tuple[Tuple[int, Fraction], ...] = field(default=())

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise WeightError(f"Unknown weight kind {self.kind!r}")
        if self.kind == "custom":
            for n, value in self.table:
                if n < 2:
                    raise WeightError(f"Custom weight keys must be orders >= 2, got {n}")
                if not isinstance(value, Fraction):
                    raise WeightError(f"Custom weight for order {n} must be a Fraction")

    @classmethod
    def cross(cls) -> "WeightFunction":
        return cls("cross")

    @classmethod
    def length(cls) -> "WeightFunction":
        return cls("length")

    @classmethod
    def dyadic(cls) -> "WeightFunction":
        return cls("dyadic")

    @classmethod
    def custom(cls, mapping: Mapping[int, Fraction]) -> "WeightFunction":
        table = tuple(sorted((int(n), Fraction(v)) for n, v in mapping.items()))
        return cls("custom", table)

    def __call__(self, n: int) -> Fraction:
        if self.kind == "cross":
            return Fraction(1, n)
        if self.kind == "length":
            return Fraction(1)
        if self.kind == "dyadic":
            return _dyadic(n)
        value = self.as_dict().get(n)
        if value is None:
            raise WeightError(f"Custom weight has no value for order {n}")
        return value

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.table)

    @property
    def name(self) -> str:
        return self.kind

    def to_dict(self) -> Dict:
        data: Dict = {"kind": self.kind}
        if self.kind == "custom":
            data["table"] = {str(n): {"num": v.numerator, "den": v.denominator} for n, v in self.table}
        return data


CROSS = WeightFunction.cross()
LENGTH = WeightFunction.length()
DYADIC = WeightFunction.dyadic()


def parse_weight(name: str) -> WeightFunction:
    """Named weight (cross, length, dyadic)"""
    if name == "custom" or name not in WEIGHT_KINDS:
        raise WeightError(f"Unknown weight {name!r}; expected cross, length or dyadic")
    return WeightFunction(name)
