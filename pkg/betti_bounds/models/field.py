"""
Coefficient Field Model
"""

from dataclasses import dataclass

from sympy import isprime

from ..errors import ContractViolation


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic (0 or a prime)"""
    characteristic: int

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ContractViolation(
                f"Field characteristic must be 0 or a prime, got {self.characteristic}",
                {'characteristic': self.characteristic},
            )

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def is_even(self) -> bool:
        """Characteristic 2, where graded-commutative means commutative"""
        return self.characteristic == 2

    def __str__(self) -> str:
        return 'Q' if self.characteristic == 0 else f"F{self.characteristic}"


RATIONALS = FieldSpec(0)
F2 = FieldSpec(2)
