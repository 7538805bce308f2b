"""
Dyer-Lashof Word Models

Words are stored in the order written, index 0 being the
first entry (s_1, or (epsilon_1, s_1)).  Admissibility, excess and b
are read off that order verbatim.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from sympy import isprime

from ..errors import ContractViolation

Letter = Tuple[int, int]  # (epsilon, s); epsilon is always 0 at p = 2


class DLConvention(Enum):
    """Excess condition selecting the basis of the free unstable module"""
    STRICT = 'strict'
    PAPER = 'paper'

    @classmethod
    def parse(cls, value: Union[str, 'DLConvention']) -> 'DLConvention':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ContractViolation(f"Unknown Dyer-Lashof convention '{value}', use strict or paper")

    def allows(self, excess_plus_b: float, degree: int) -> bool:
        if self is DLConvention.STRICT:
            return excess_plus_b > degree
        return excess_plus_b >= degree


@dataclass(frozen=True)
class AdmissibleSeq:
    """An admissible Dyer-Lashof word"""
    p: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isprime(self.p):
            raise ContractViolation(f"Dyer-Lashof prime must be prime, got {self.p}")
        letters = tuple((int(e), int(s)) for e, s in self.letters)
        object.__setattr__(self, 'letters', letters)
        for i, (eps, s) in enumerate(letters):
            if self.p == 2 and eps != 0:
                raise ContractViolation("Bockstein letters do not exist at p = 2", {'index': i})
            if eps not in (0, 1):
                raise ContractViolation(f"epsilon must be 0 or 1, got {eps}", {'index': i})
            if s < 1:
                raise ContractViolation(f"operation index s must be >= 1, got {s}", {'index': i})
        for i in range(len(letters) - 1):
            eps_i, s_i = letters[i]
            if letters[i + 1][1] > self.p * s_i - eps_i:
                raise ContractViolation(
                    f"Word {self.word()} is not admissible at position {i + 1}",
                    {'word': self.word(), 'index': i + 1},
                )

    @classmethod
    def mod2(cls, *entries: int) -> 'AdmissibleSeq':
        return cls(2, tuple((0, s) for s in entries))

    @classmethod
    def odd(cls, p: int, *entries: Letter) -> 'AdmissibleSeq':
        return cls(p, tuple(entries))

    def word(self) -> list:
        """JSON form: s values at p = 2, [epsilon, s] pairs otherwise"""
        if self.p == 2:
            return [s for _, s in self.letters]
        return [[e, s] for e, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def concat(self, other: 'AdmissibleSeq') -> 'AdmissibleSeq':
        if other.p != self.p:
            raise ContractViolation("Cannot concatenate words at different primes")
        return AdmissibleSeq(self.p, self.letters + other.letters)


def letter_shift(p: int, letter: Letter) -> int:
    eps, s = letter
    if p == 2:
        return s
    return 2 * s * (p - 1) - eps


def letter_lead(p: int, letter: Letter) -> int:
    """Contribution of the first letter to the excess"""
    eps, s = letter
    if p == 2:
        return s
    return 2 * s - eps


def degree_shift(word: AdmissibleSeq) -> int:
    return sum(letter_shift(word.p, letter) for letter in word.letters)


def excess(word: AdmissibleSeq) -> float:
    """e(I); the empty word has infinite excess"""
    if not word.letters:
        return math.inf
    return letter_lead(word.p, word.letters[0]) - sum(
        letter_shift(word.p, letter) for letter in word.letters[1:]
    )


def b_of(word: AdmissibleSeq) -> int:
    if not word.letters or word.p == 2:
        return 0
    return word.letters[0][0]
