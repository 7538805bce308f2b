"""
Graded Dimension Models
Truncated Poincare series and graded generator multiplicities
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from ..errors import ContractViolation


@dataclass(frozen=True)
class PoincareSeries:
    """Exact graded dimensions in degrees 0..cap"""
    cap: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.cap < 0:
            raise ContractViolation(f"Series cap must be nonnegative, got {self.cap}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.cap + 1:
            raise ContractViolation(
                f"Series of cap {self.cap} needs {self.cap + 1} coefficients, got {len(coeffs)}"
            )
        if any(c < 0 for c in coeffs):
            raise ContractViolation("Series coefficients must be nonnegative")
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def one(cls, cap: int) -> 'PoincareSeries':
        return cls(cap, (1,) + (0,) * cap)

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> 'PoincareSeries':
        values = tuple(coeffs)
        return cls(len(values) - 1, values)

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree <= self.cap:
            return self.coeffs[degree]
        raise IndexError(f"degree {degree} outside 0..{self.cap}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def dominates(self, other: 'PoincareSeries') -> bool:
        """Coefficientwise >= over the shared degree range"""
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def truncate(self, cap: int) -> 'PoincareSeries':
        """Explicit lowering of the cap; never pads"""
        if cap > self.cap:
            raise ContractViolation(f"Cannot extend a series of cap {self.cap} to {cap}")
        return PoincareSeries(cap, self.coeffs[:cap + 1])

    def to_dict(self) -> dict:
        return {'cap': self.cap, 'coeffs': [str(c) for c in self.coeffs]}


@dataclass(frozen=True)
class GradedDims:
    """Generator multiplicities by degree; all degrees are positive"""
    dims: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[int, int] = {}
        for degree, count in self.dims.items():
            degree, count = int(degree), int(count)
            if count < 0:
                raise ContractViolation(f"Negative multiplicity {count} in degree {degree}")
            if count == 0:
                continue
            if degree <= 0:
                raise ContractViolation(
                    f"Generators must sit in positive degrees, got degree {degree}",
                    {'degree': degree},
                )
            cleaned[degree] = count
        object.__setattr__(self, 'dims', dict(sorted(cleaned.items())))

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def __iter__(self):
        return iter(self.dims)

    def items(self):
        return self.dims.items()

    def __bool__(self) -> bool:
        return bool(self.dims)

    def __hash__(self):
        return hash(tuple(self.dims.items()))

    def total(self) -> int:
        return sum(self.dims.values())

    def direct_sum(self, other: 'GradedDims') -> 'GradedDims':
        merged = dict(self.dims)
        for degree, count in other.items():
            merged[degree] = merged.get(degree, 0) + count
        return GradedDims(merged)

    def truncate(self, cap: int) -> 'GradedDims':
        return GradedDims({d: c for d, c in self.dims.items() if d <= cap})

    @classmethod
    def from_series(cls, series: PoincareSeries, shift: int) -> 'GradedDims':
        """Generators with multiplicities series[d] in degree d + shift"""
        return cls({d + shift: c for d, c in enumerate(series.coeffs) if c})

    @classmethod
    def parse(cls, spec: str) -> 'GradedDims':
        """Parse the CLI form ``degree:count,degree:count``"""
        dims: Dict[int, int] = {}
        for chunk in filter(None, (part.strip() for part in spec.split(','))):
            try:
                degree, count = chunk.split(':')
                dims[int(degree)] = dims.get(int(degree), 0) + int(count)
            except ValueError:
                raise ContractViolation(f"Malformed generator spec '{chunk}', expected degree:count")
        return cls(dims)

    def to_dict(self) -> dict:
        return {str(d): c for d, c in self.dims.items()}
