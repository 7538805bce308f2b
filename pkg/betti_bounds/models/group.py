"""
Structure Group Model
"""

import re
from enum import Enum
from typing import Union

from ..errors import ContractViolation


class GroupKind(Enum):
    """Structure groups of the normal bundles: U(1), T(2) = U(1)^2, N(2) = U(1) wr Z/2"""
    U1 = 'U1'
    T2 = 'T2'
    N2 = 'N2'

    @classmethod
    def parse(cls, value: Union[str, 'GroupKind']) -> 'GroupKind':
        """Accepts U1, u(1), BT2 and similar spellings"""
        if isinstance(value, cls):
            return value
        key = re.sub(r'[^A-Z0-9]', '', str(value).upper())
        if key.startswith('B') and len(key) == 3:
            key = key[1:]
        try:
            return cls(key)
        except ValueError:
            raise ContractViolation(f"Unknown structure group '{value}', use U1, T2 or N2")
