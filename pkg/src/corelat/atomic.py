"""Atomic length statistics on translation parts and their enumeration.

For a dominant weight Lambda = lambda + level * Lambda_0 + z * delta and a
translation by x, the statistic evaluates to

    h * (lambda | x) + (level * h / 2) * |x|^2 - level * ht(x),

which specialises to (h/2)|x|^2 - ht(x) at Lambda_0.  The delta coefficient
z never contributes.  Everything is exact over Fraction.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import dynkin, linalg
from .dynkin import NotInRootSpan, lookup_type


class BadIndex(ValueError):
    """Fundamental-weight index outside 1..n."""


class UnsupportedLattice(ValueError):
    """No basis of the requested lattice is registered for this type."""


@dataclass(frozen=True)
class LatticeVector:
    """A stored-coordinate vector attached to its affine type."""
    type_id: str
    coords: tuple
    membership: str = field(default="M", compare=False)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class DominantWeight:
    type_id: str
    finite_part: tuple      # stored coordinates of lambda
    level: Fraction
    delta_coeff: Fraction = Fraction(0)


def _coords(v):
    if isinstance(v, LatticeVector):
        v = v.coords
    return tuple(Fraction(x) for x in v)


def _type(t):
    return t if isinstance(t, dynkin.TypeData) else lookup_type(t)


def weight_Lambda0(t):
    t = _type(t)
    zero = tuple(Fraction(0) for _ in range(t.ambient_dim))
    return DominantWeight(t.name, zero, Fraction(1))


def weight_Lambda(t, i):
    """The fundamental weight Lambda_i = omega_i + (a_i^v / a_0^v) Lambda_0."""
    t = _type(t)
    if i == 0:
        return weight_Lambda0(t)
    if not 1 <= i <= t.n:
        raise BadIndex(f"index {i} outside 1..{t.n} for {t.name}")
    omega = dynkin.fundamental_weights(t)[i - 1]
    return DominantWeight(t.name, omega, Fraction(t.comarks[i], t.comarks[0]))


def height(t, v):
    """Sum of the simple-root coefficients of v (rational on L)."""
    t = _type(t)
    return sum(dynkin.simple_root_coefficients(t, _coords(v)))


def norm_sq(t, v):
    t = _type(t)
    v = _coords(v)
    return t.inner(v, v)


def atomic_length0(t, v):
    """(h/2)|v|^2 - ht(v); total on the rational root span."""
    t = _type(t)
    v = _coords(v)
    return Fraction(t.h, 2) * norm_sq(t, v) - height(t, v)


def atomic_length_i(t, i, v):
    """Statistic at the i-th fundamental weight, on a translation part."""
    t = _type(t)
    if not 1 <= i <= t.n:
        raise BadIndex(f"index {i} outside 1..{t.n} for {t.name}")
    v = _coords(v)
    omega = dynkin.fundamental_weights(t)[i - 1]
    ratio = Fraction(t.comarks[i], t.comarks[0])
    return ratio * atomic_length0(t, v) + t.h * t.inner(omega, v)


def extended_atomic_length(t, weight, x):
    """Statistic for an arbitrary dominant weight on a translation by x."""
    t = _type(t)
    x = _coords(x)
    lam = _coords(weight.finite_part)
    level = Fraction(weight.level)
    return (t.h * t.inner(lam, x)
            + Fraction(1, 2) * norm_sq(t, x) * level * t.h
            - level * height(t, x))


def defect(t, weight, x, y):
    """Additivity defect h * level * (x|y) for the identity finite part."""
    t = _type(t)
    return t.h * Fraction(weight.level) * t.inner(_coords(x), _coords(y))


def _basis(t, lattice):
    if lattice == "M":
        return t.m_basis
    if lattice == "L":
        if t.l_basis is None:
            raise UnsupportedLattice(f"no L-basis registered for {t.name}")
        return t.l_basis
    raise ValueError(f"unknown lattice {lattice!r}")


@lru_cache(maxsize=None)
def _length_form(type_name, weight_index, lattice):
    """Quadratic model of the statistic over integer basis coefficients.

    Returns (a, b, basis) with value(m) = m^T a m + b.m for the lattice point
    sum_i m_i basis_i.
    """
    t = lookup_type(type_name)
    basis = _basis(t, lattice)
    if weight_index == 0:
        lam = tuple(Fraction(0) for _ in range(t.ambient_dim))
        level = Fraction(1)
    else:
        weight = weight_Lambda(t, weight_index)
        lam, level = weight.finite_part, weight.level
    k = len(basis)
    a = tuple(
        tuple(Fraction(level * t.h, 2) * t.inner(basis[i], basis[j]) for j in range(k))
        for i in range(k)
    )
    b = tuple(
        t.h * t.inner(lam, basis[i]) - level * height(t, basis[i])
        for i in range(k)
    )
    return a, b, basis


def _to_vector(t, basis, m, lattice):
    coords = tuple(
        sum(m[i] * basis[i][d] for i in range(len(basis)))
        for d in range(t.ambient_dim)
    )
    return LatticeVector(t.name, coords, lattice)


def enumerate_atomic(t, weight_index, target, lattice="M"):
    """All lattice points with the given atomic length, sorted by coordinates.

    Completeness comes from the exact positive-definite enumeration of the
    quadratic model; every returned point re-evaluates to the target.
    """
    t = _type(t)
    if target < 0:
        raise ValueError("atomic length target must be non-negative")
    a, b, basis = _length_form(t.name, weight_index, lattice)
    points = linalg.enumerate_quadratic_level(a, b, Fraction(target))
    vectors = [_to_vector(t, basis, m, lattice) for m in points]
    return sorted(vectors, key=lambda v: v.coords)


def enumerate_atomic_upto(t, weight_index, bound, lattice="M"):
    """Dict mapping each value <= bound to its sorted list of lattice points."""
    t = _type(t)
    a, b, basis = _length_form(t.name, weight_index, lattice)
    buckets = {}
    for value, m in linalg.enumerate_quadratic_upto(a, b, Fraction(bound)):
        buckets.setdefault(value, []).append(_to_vector(t, basis, m, lattice))
    for value in buckets:
        buckets[value].sort(key=lambda v: v.coords)
    return buckets


def in_lattice(t, v, lattice="M"):
    """Whether v is an integer combination of the lattice basis."""
    t = _type(t)
    coeffs = linalg.solve_in_span(_basis(t, lattice), _coords(v))
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)
