"""Integer points of diagonal quadratic forms and finite group actions.

solve_diagonal is the trusted brute-force oracle used by every verifier;
solve_diagonal_meet is an independent cross-check implementation.  Groups
are small and act through explicit formulas; half-integer matrices check
integrality of the image on every application.
"""

import itertools
import math
from math import isqrt


class NonIntegralImage(ValueError):
    """A half-integer matrix was applied outside its parity domain."""


class NotClosed(ValueError):
    """The point set is not closed under the requested action."""


class Unsolvable(ValueError):
    """No representation as a sum of two squares exists."""


def solve_diagonal(form, k):
    """All integer tuples x with sum_i form[i] * x_i^2 = k, sorted."""
    form = tuple(int(d) for d in form)
    if any(d < 1 for d in form):
        raise ValueError("form coefficients must be positive")
    if k < 0:
        return []
    solutions = []

    def rec(i, remaining, acc):
        if i == len(form):
            if remaining == 0:
                solutions.append(tuple(acc))
            return
        d = form[i]
        bound = isqrt(remaining // d)
        for x in range(-bound, bound + 1):
            rec(i + 1, remaining - d * x * x, acc + [x])

    rec(0, k, [])
    return sorted(solutions)


def solve_diagonal_meet(form, k):
    """Independent meet-in-the-middle implementation of solve_diagonal."""
    form = tuple(int(d) for d in form)
    if k < 0:
        return []
    split = max(1, len(form) // 2)
    left, right = form[:split], form[split:]

    def values(part):
        table = {}
        ranges = [range(-isqrt(k // d), isqrt(k // d) + 1) for d in part]
        for xs in itertools.product(*ranges):
            v = sum(d * x * x for d, x in zip(part, xs))
            if v <= k:
                table.setdefault(v, []).append(xs)
        return table

    lhs = values(left)
    out = []
    if right:
        rhs = values(right)
        for v, xs_list in lhs.items():
            for ys in rhs.get(k - v, ()):
                out.extend(xs + ys for xs in xs_list)
    else:
        out = list(lhs.get(k, ()))
    return sorted(out)


# ---------------------------------------------------------------------------
# Group actions


def _act_d8(element, point):
    k, e = element
    x, y = point
    if e:
        x, y = y, x
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)


def _act_c6(k, point):
    x, y = point
    for _ in range(k % 6):
        if (x + y) % 2:
            raise NonIntegralImage(f"({x},{y}) is outside the parity domain")
        x, y = (x - 3 * y) // 2, (x + y) // 2
    return (x, y)


def _act_ga3(element, point):
    k, e = element
    x, y, z = point
    if e:
        z = -z
    for _ in range(k % 6):
        if (x - z) % 2:
            raise NonIntegralImage(f"({x},{y},{z}) is outside the parity domain")
        x, z = (x - 3 * z) // 2, (x + z) // 2
    return (x, y, z)


def group_elements(group, arity=None):
    """The elements of a named group as opaque tokens usable with act()."""
    if group == "D8":
        return [(k, e) for k in range(4) for e in (0, 1)]
    if group == "C4":
        return list(range(4))
    if group == "V4":
        return [(sx, sy) for sx in (1, -1) for sy in (1, -1)]
    if group == "C6":
        return list(range(6))
    if group == "G_A3":
        return [(k, e) for k in range(6) for e in (0, 1)]
    if group == "H":
        if arity is None:
            raise ValueError("hyperoctahedral group needs the arity")
        return [(p, s) for p in itertools.permutations(range(arity))
                for s in itertools.product((1, -1), repeat=arity)]
    raise ValueError(f"unknown group {group!r}")


def group_order(group, arity=None):
    if group == "D8":
        return 8
    if group in ("C4", "V4"):
        return 4
    if group == "C6":
        return 6
    if group == "G_A3":
        return 12
    if group == "H":
        return (2 ** arity) * math.factorial(arity)
    raise ValueError(f"unknown group {group!r}")


def act(group, element, point):
    """Exact image of a point under one group element."""
    point = tuple(point)
    if group == "D8":
        return _act_d8(element, point)
    if group == "C4":
        return _act_d8((element, 0), point)
    if group == "V4":
        sx, sy = element
        return (sx * point[0], sy * point[1])
    if group == "C6":
        return _act_c6(element, point)
    if group == "G_A3":
        return _act_ga3(element, point)
    if group == "H":
        perm, signs = element
        return tuple(s * point[p] for s, p in zip(signs, perm))
    raise ValueError(f"unknown group {group!r}")


def _arity_of(group, points):
    return len(next(iter(points))) if group == "H" else None


def orbit(group, point, arity=None):
    return {act(group, g, point) for g in group_elements(group, arity)}


def orbit_partition(group, solutions):
    """Partition a closed solution set into orbits, sorted by their minima."""
    points = [tuple(p) for p in solutions]
    pool = set(points)
    arity = _arity_of(group, points) if points else None
    seen = set()
    orbits = []
    for p in sorted(points):
        if p in seen:
            continue
        orb = orbit(group, p, arity)
        if not orb <= pool:
            raise NotClosed(f"orbit of {p} leaves the solution set")
        orbits.append(sorted(orb))
        seen |= orb
    return orbits


def is_action_free(group, solutions):
    """(True, None) when every orbit has full group size, else (False, witness).

    The witness is the largest point of the first undersized orbit, which for
    the sign-symmetric actions used here is its all-non-negative member.
    """
    points = [tuple(p) for p in solutions]
    order = group_order(group, _arity_of(group, points) if points else None)
    for orb in orbit_partition(group, points):
        if len(orb) < order:
            return False, orb[-1]
    return True, None


# ---------------------------------------------------------------------------
# Sums of two squares


def factorize(k):
    """Trial-division factorisation, {prime: exponent}."""
    if k < 1:
        raise ValueError("factorize needs a positive integer")
    factors = {}
    for p in itertools.chain((2,), itertools.count(3, 2)):
        if p * p > k:
            break
        while k % p == 0:
            factors[p] = factors.get(p, 0) + 1
            k //= p
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


def two_squares_solvable(k):
    """Whether x^2 + y^2 = k has integer solutions."""
    if k < 0:
        return False
    if k == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(k).items() if p % 4 == 3)


class GaussianLift:
    """Bijection data between solution sets of x^2+y^2 = m and = k.

    k factors as 2^alpha * c^2 * m with m odd and free of prime factors
    congruent to 3 mod 4; multiplication by (1+i)^alpha * c carries
    solutions for m onto solutions for k.
    """

    def __init__(self, k):
        if k < 1:
            raise Unsolvable("k must be positive")
        if not two_squares_solvable(k):
            raise Unsolvable(f"{k} is not a sum of two squares")
        factors = factorize(k)
        self.k = k
        self.alpha = factors.get(2, 0)
        self.c = 1
        for p, e in factors.items():
            if p % 4 == 3:
                self.c *= p ** (e // 2)
        self.m = k // (2 ** self.alpha * self.c * self.c)

    def apply(self, point):
        x, y = point
        for _ in range(self.alpha):
            x, y = x - y, x + y
        return (self.c * x, self.c * y)


def gaussian_lift(k):
    return GaussianLift(k)


def residue_free_criterion(a, b):
    """True when b mod a is neither a quadratic residue nor twice one."""
    if a < 2:
        raise ValueError("modulus must be at least 2")
    residues = {(x * x) % a for x in range(a)}
    doubled = {(2 * r) % a for r in residues}
    return (b % a) not in residues | doubled
