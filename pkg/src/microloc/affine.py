"""Integers (and rationals) affine in named free parameters.

The solver leaves some unknowns undetermined; every quantity downstream is
an affine combination like ``c - 2`` or ``3`` and must stay exact.  AffineInt
stores a rational constant plus a sparse map of parameter coefficients and
keeps itself in canonical form, so equality is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction


def _coerce(value):
    if isinstance(value, AffineInt):
        return value
    if isinstance(value, (int, Fraction)):
        return AffineInt(value)
    raise TypeError(f"cannot interpret {value!r} as an affine form")


class AffineInt:
    """An exact affine form  constant + sum(coeff_p * p).

    >>> c = AffineInt.parameter("c")
    >>> print(c - 2)
    c-2
    >>> (c - 2).substitute({"c": 2})
    Fraction(0, 1)
    >>> (2 * c).coeffs
    {'c': Fraction(2, 1)}
    """

    __slots__ = ("constant", "coeffs")

    def __init__(self, constant=0, coeffs=None):
        self.constant = Fraction(constant)
        clean = {}
        for name, co in (coeffs or {}).items():
            co = Fraction(co)
            if co:
                clean[name] = co
        self.coeffs = clean

    @classmethod
    def parameter(cls, name, coeff=1):
        return cls(0, {name: Fraction(coeff)})

    # ---- arithmetic ----

    def __add__(self, other):
        other = _coerce(other)
        coeffs = dict(self.coeffs)
        for name, co in other.coeffs.items():
            coeffs[name] = coeffs.get(name, Fraction(0)) + co
        return AffineInt(self.constant + other.constant, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return AffineInt(-self.constant, {n: -co for n, co in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        # products of two genuinely affine forms leave the affine world
        if self.coeffs and other.coeffs:
            raise ValueError(f"product of {self} and {other} is not affine")
        if other.coeffs:
            self, other = other, self
        k = other.constant
        return AffineInt(self.constant * k, {n: co * k for n, co in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = Fraction(k)
        return AffineInt(self.constant / k, {n: co / k for n, co in self.coeffs.items()})

    # ---- structure ----

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.constant == other.constant and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.constant, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.constant) or bool(self.coeffs)

    def is_constant(self):
        return not self.coeffs

    def constant_value(self):
        if self.coeffs:
            raise ValueError(f"{self} depends on {sorted(self.coeffs)}")
        return self.constant

    def parameters(self):
        return set(self.coeffs)

    def substitute(self, assignment):
        """Replace parameters by exact values; unmentioned ones survive."""
        out = AffineInt(self.constant)
        for name, co in self.coeffs.items():
            if name in assignment:
                out = out + co * Fraction(assignment[name])
            else:
                out = out + AffineInt(0, {name: co})
        if out.coeffs:
            return out
        return out.constant

    # ---- rendering ----

    def __str__(self):
        parts = []
        for name in sorted(self.coeffs):
            co = self.coeffs[name]
            if co == 1:
                term = name
            elif co == -1:
                term = "-" + name
            else:
                term = f"{co}{name}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        if self.constant or not parts:
            term = str(self.constant)
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"AffineInt({self})"


ZERO = AffineInt(0)
