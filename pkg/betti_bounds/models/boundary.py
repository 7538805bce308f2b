"""
Boundary Component Models
Irreducible boundary components, level maps, A-partitions and bound reports
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from ..errors import BoundaryComponentError, ContractViolation
from .group import GroupKind
from .series import PoincareSeries


@dataclass(frozen=True)
class BoundaryComponent:
    """An irreducible boundary component: irr, or separating (h, P)"""
    kind: str
    h: Optional[int] = None
    P: FrozenSet[int] = frozenset()

    def __post_init__(self):
        if self.kind not in ('irr', 'sep'):
            raise BoundaryComponentError(f"Unknown boundary kind '{self.kind}'")
        object.__setattr__(self, 'P', frozenset(self.P))
        if self.kind == 'irr' and (self.h is not None or self.P):
            raise BoundaryComponentError("irr carries no genus split or marking set")
        if self.kind == 'sep' and (self.h is None or self.h < 0):
            raise BoundaryComponentError("Separating components need a genus h >= 0")

    @classmethod
    def irr(cls) -> 'BoundaryComponent':
        return cls('irr')

    @classmethod
    def sep(cls, h: int, P: Iterable[int] = ()) -> 'BoundaryComponent':
        return cls('sep', h, frozenset(P))

    @property
    def is_irr(self) -> bool:
        return self.kind == 'irr'

    @property
    def g_alpha(self) -> int:
        """1 for irr, otherwise the lesser genus h"""
        return 1 if self.is_irr else self.h

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        if self.is_irr:
            return (0, 0, ())
        return (1, self.h, tuple(sorted(self.P)))

    def __lt__(self, other: 'BoundaryComponent') -> bool:
        return self.sort_key() < other.sort_key()

    def label(self) -> str:
        """CLI form: irr, sep:h or sep:h:{1,2}"""
        if self.is_irr:
            return 'irr'
        if not self.P:
            return f"sep:{self.h}"
        return f"sep:{self.h}:{{{','.join(str(i) for i in sorted(self.P))}}}"

    def __str__(self) -> str:
        return self.label()

    @classmethod
    def parse(cls, text: str) -> 'BoundaryComponent':
        text = text.strip()
        if text == 'irr':
            return cls.irr()
        parts = text.split(':', 2)
        if parts[0] != 'sep' or len(parts) < 2:
            raise BoundaryComponentError(f"Cannot parse boundary component '{text}'")
        try:
            h = int(parts[1])
            P = ()
            if len(parts) == 3:
                inner = parts[2].strip().strip('{}')
                P = tuple(int(x) for x in inner.split(',') if x.strip())
        except ValueError:
            raise BoundaryComponentError(f"Cannot parse boundary component '{text}'")
        return cls.sep(h, P)


@dataclass(frozen=True)
class LevelMap:
    """A subset A of D+ with levels l: A -> {0, 1}"""
    ell: Mapping[BoundaryComponent, int] = field(default_factory=dict)

    def __post_init__(self):
        ell = {alpha: int(level) for alpha, level in self.ell.items()}
        for alpha, level in ell.items():
            if level not in (0, 1):
                raise ContractViolation(f"Level of {alpha} must be 0 or 1, got {level}")
            if alpha.is_irr and level != 1:
                raise ContractViolation("The level of irr is always 1")
        object.__setattr__(self, 'ell', dict(sorted(ell.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def of(cls, components: Iterable[BoundaryComponent],
           levels: Optional[Mapping[BoundaryComponent, int]] = None) -> 'LevelMap':
        """Default level is 1 (irr is forced to 1)"""
        levels = dict(levels or {})
        return cls({a: (1 if a.is_irr else levels.get(a, 1)) for a in components})

    @property
    def A(self) -> Tuple[BoundaryComponent, ...]:
        return tuple(self.ell)

    def __hash__(self):
        return hash(tuple(self.ell.items()))

    def level(self, alpha: BoundaryComponent) -> int:
        return self.ell[alpha]

    def group(self, alpha: BoundaryComponent) -> GroupKind:
        if alpha.is_irr:
            return GroupKind.N2
        return GroupKind.T2 if self.ell[alpha] == 1 else GroupKind.U1

    def to_dict(self) -> Dict[str, int]:
        return {alpha.label(): level for alpha, level in self.ell.items()}


@dataclass(frozen=True)
class APartition:
    """Multiplicities m_alpha with residual genus r = g - sum m_alpha g_alpha"""
    g: int
    m: Mapping[BoundaryComponent, int] = field(default_factory=dict)

    def __post_init__(self):
        m = {alpha: int(count) for alpha, count in self.m.items()}
        if any(count < 0 for count in m.values()):
            raise ContractViolation("Partition multiplicities must be nonnegative")
        object.__setattr__(self, 'm', dict(sorted(m.items(), key=lambda kv: kv[0].sort_key())))

    def __hash__(self):
        return hash((self.g, tuple(self.m.items())))

    @property
    def r(self) -> int:
        return self.g - sum(count * alpha.g_alpha for alpha, count in self.m.items())

    @property
    def is_valid(self) -> bool:
        return self.r >= 0

    def count(self, alpha: BoundaryComponent) -> int:
        return self.m.get(alpha, 0)

    def vector(self) -> Tuple[int, ...]:
        return tuple(self.m.values())

    def to_dict(self) -> Dict[str, int]:
        return {alpha.label(): count for alpha, count in self.m.items()}


@dataclass(frozen=True)
class BoundReport:
    """Per-degree lower bounds on dim H_i of the moduli stack"""
    g: int
    n: int
    levels: LevelMap
    characteristic: int
    cap: int
    convention: str
    c_value: Fraction
    optimal_partition: APartition
    bounds: Mapping[int, int]
    closed_form: Optional[Fraction] = None
    target: Optional[PoincareSeries] = None

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.bounds))
