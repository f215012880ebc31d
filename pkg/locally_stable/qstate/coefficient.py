import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

HALF = Fraction(1, 2)

# phases whose value has an exact double representation
EXACT_UNITS: dict[Fraction, tuple[float, float]] = {
    Fraction(0): (1.0, 0.0),
    Fraction(1, 4): (0.0, 1.0),
    Fraction(1, 2): (-1.0, 0.0),
    Fraction(3, 4): (0.0, -1.0),
}


@dataclass(frozen=True, order=True)
class Coefficient:
    """Exact monomial scale · e^(2πi·phase), phase counted in full turns.

    Canonical form keeps scale ≥ 0 (a negative sign becomes half a turn),
    0 ≤ phase < 1, and phase 0 whenever scale is 0.
    """

    scale: Fraction = field(default=Fraction(1))
    phase: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        scale = Fraction(self.scale)
        phase = Fraction(self.phase)
        if scale < 0:
            scale = -scale
            phase += HALF
        phase %= 1
        if scale == 0:
            phase = Fraction(0)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "phase", phase)

    @classmethod
    def one(cls) -> "Coefficient":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def root(cls, p: int, t: int = 1) -> "Coefficient":
        """ω_p^t"""
        if p < 1:
            raise ValueError(f"root of unity order must be positive, got {p}")
        return cls(Fraction(1), Fraction(t, p))

    @classmethod
    def from_parts(
        cls, num: int, den: int, phase_num: int = 0, phase_den: int = 1
    ) -> "Coefficient":
        if den <= 0 or phase_den <= 0:
            raise ValueError(f"denominators must be positive, got {den} and {phase_den}")
        return cls(Fraction(num, den), Fraction(phase_num, phase_den))

    @property
    def num(self) -> int:
        return self.scale.numerator

    @property
    def den(self) -> int:
        return self.scale.denominator

    @property
    def phase_num(self) -> int:
        return self.phase.numerator

    @property
    def phase_den(self) -> int:
        return self.phase.denominator

    @property
    def is_zero(self) -> bool:
        return self.scale == 0

    @property
    def value(self) -> complex:
        return coeff_value(self)

    def conjugate(self) -> "Coefficient":
        return Coefficient(self.scale, -self.phase)

    def try_add(self, other: "Coefficient") -> Optional["Coefficient"]:
        """Sum of two monomials, or None when the sum is not a monomial"""
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.phase == other.phase:
            return Coefficient(self.scale + other.scale, self.phase)
        if (self.phase - other.phase) % 1 == HALF:
            return Coefficient(self.scale - other.scale, self.phase)
        return None

    def __mul__(self, other: "Coefficient | int | Fraction") -> "Coefficient":
        if isinstance(other, (int, Fraction)):
            return Coefficient(self.scale * other, self.phase)
        return Coefficient(self.scale * other.scale, self.phase + other.phase)

    __rmul__ = __mul__

    def __truediv__(self, other: "Coefficient") -> "Coefficient":
        if other.is_zero:
            raise ZeroDivisionError("division by a zero coefficient")
        return Coefficient(self.scale / other.scale, self.phase - other.phase)

    def __neg__(self) -> "Coefficient":
        return Coefficient(self.scale, self.phase + HALF)

    def __pow__(self, exponent: int) -> "Coefficient":
        if exponent < 0:
            return Coefficient.one() / self ** (-exponent)
        return Coefficient(self.scale**exponent, self.phase * exponent)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.phase in (0, HALF):
            sign = "-" if self.phase == HALF else ""
            return f"{sign}{self.scale}"
        root = f"w{self.phase_den}"
        if self.phase_num != 1:
            root += f"^{self.phase_num}"
        return root if self.scale == 1 else f"{self.scale}·{root}"


def coeff_value(c: Coefficient) -> complex:
    """Evaluate a coefficient in double precision"""
    unit = EXACT_UNITS.get(c.phase)
    if unit is None:
        theta = 2 * math.pi * float(c.phase)
        unit = (math.cos(theta), math.sin(theta))
    scale = float(c.scale)
    return complex(scale * unit[0], scale * unit[1])


def merge_monomials(coefficients: list[Coefficient]) -> Optional[Coefficient]:
    """Exact sum of monomials when it stays a monomial"""
    total = Coefficient(Fraction(0))
    for coefficient in coefficients:
        merged = total.try_add(coefficient)
        if merged is None:
            return None
        total = merged
    return total
