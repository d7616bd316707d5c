"""Registry of affine Dynkin type data over exact rationals.

Each supported type carries its marks, comarks, Coxeter number and an
explicit realisation of the simple roots in an ambient epsilon-basis.
Types whose textbook realisation involves sqrt(2) are stored as rational
coordinate vectors together with scale_sq = 2: the true vector is
sqrt(scale_sq) times the stored one, so every inner product is
scale_sq * (dot product of stored coordinates), which keeps all
arithmetic exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg


class UnknownType(ValueError):
    """Requested (family, rank, twist) is not a supported affine type."""


class NotInRootSpan(ValueError):
    """Vector is not a rational combination of the simple roots."""


def _vec(*entries):
    return tuple(Fraction(e) for e in entries)


def _unit(dim, i, value=1):
    return tuple(Fraction(value) if j == i else Fraction(0) for j in range(dim))


@dataclass(frozen=True)
class AffineTypeId:
    family: str
    rank_label: int
    twist: int

    @classmethod
    def parse(cls, text):
        """Parse the serialised form '<FAMILY><rank>_<twist>', e.g. 'C2_1'."""
        try:
            head, twist = text.split("_")
            family = head[0]
            rank_label = int(head[1:])
            return cls(family, rank_label, int(twist))
        except (ValueError, IndexError):
            raise UnknownType(f"malformed type id {text!r}") from None

    def __str__(self):
        return f"{self.family}{self.rank_label}_{self.twist}"


@dataclass(frozen=True)
class TypeData:
    id: AffineTypeId
    n: int                      # number of finite simple roots
    marks: tuple                # a_0 .. a_n
    comarks: tuple              # a_0^v .. a_n^v
    h: int                      # Coxeter number, sum of the marks
    ambient_dim: int
    scale_sq: int               # 1 or 2
    simple_roots: tuple         # stored coordinates
    m_basis: tuple              # Z-basis of the lattice M, stored coordinates
    l_basis: tuple              # Z-basis of L when registered, else None
    J: tuple                    # indices i >= 1 with a_i = 1

    def inner(self, v, w):
        """Bilinear form in stored coordinates."""
        return self.scale_sq * sum(Fraction(a) * Fraction(b) for a, b in zip(v, w))

    @property
    def name(self):
        return str(self.id)


def _omega1_type_a(n):
    # e_1 - (1/(n+1)) * (e_1 + ... + e_{n+1})
    frac = Fraction(1, n + 1)
    return tuple(Fraction(1) - frac if i == 0 else -frac for i in range(n + 1))


def _build_type(tid):
    fam, m, tw = tid.family, tid.rank_label, tid.twist
    if tw == 1:
        if fam == "A" and m >= 1:
            n = m
            roots = tuple(
                tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                      for j in range(n + 1))
                for i in range(n)
            )
            alpha = list(roots)
            l_basis = (_omega1_type_a(n),) + tuple(alpha[: n - 1])
            return TypeData(tid, n, (1,) * (n + 1), (1,) * (n + 1), n + 1, n + 1, 1,
                            roots, roots, l_basis, tuple(range(1, n + 1)))
        if fam == "B" and m >= 3:
            n = m
            roots = tuple(
                tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                      for j in range(n))
                for i in range(n - 1)
            ) + (_unit(n, n - 1),)
            m_basis = roots[:-1] + (_unit(n, n - 1, 2),)
            marks = (1, 1) + (2,) * (n - 1)
            comarks = (1, 1) + (2,) * (n - 2) + (1,)
            return TypeData(tid, n, marks, comarks, 2 * n, n, 1,
                            roots, m_basis, None, (1,))
        if fam == "C" and m >= 2:
            n = m
            roots = tuple(
                tuple(Fraction(1, 2) if j == i else Fraction(-1, 2) if j == i + 1 else Fraction(0)
                      for j in range(n))
                for i in range(n - 1)
            ) + (_unit(n, n - 1),)
            m_basis = tuple(_unit(n, i) for i in range(n))
            omega_n = tuple(Fraction(1, 2) for _ in range(n))
            l_basis = tuple(_unit(n, i) for i in range(n - 1)) + (omega_n,)
            marks = (1,) + (2,) * (n - 1) + (1,)
            return TypeData(tid, n, marks, (1,) * (n + 1), 2 * n, n, 2,
                            roots, m_basis, l_basis, (n,))
        if fam == "D" and m >= 4:
            n = m
            roots = tuple(
                tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                      for j in range(n))
                for i in range(n - 1)
            ) + (tuple(Fraction(1) if j >= n - 2 else Fraction(0) for j in range(n)),)
            marks = (1, 1) + (2,) * (n - 3) + (1, 1)
            return TypeData(tid, n, marks, marks, 2 * n - 2, n, 1,
                            roots, roots, None, (1, n - 1, n))
        if fam == "E" and m in (6, 7, 8):
            n = m
            marks = {
                6: (1, 1, 2, 3, 2, 2, 1),
                7: (1, 1, 2, 3, 4, 2, 3, 2),
                8: (1, 2, 3, 4, 5, 6, 3, 4, 2),
            }[n]
            roots = tuple(
                tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                      for j in range(8))
                for i in range(n - 2)
            ) + (
                tuple(Fraction(1) if j in (n - 3, n - 2) else Fraction(0) for j in range(8)),
                tuple(Fraction(-1, 2) for _ in range(8)),
            )
            J = tuple(i for i in range(1, n + 1) if marks[i] == 1)
            return TypeData(tid, n, marks, marks, sum(marks), 8, 1,
                            roots, roots, None, J)
        if fam == "F" and m == 4:
            roots = (
                _vec(1, -1, 0, 0),
                _vec(0, 1, -1, 0),
                _vec(0, 0, 1, 0),
                _vec(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)),
            )
            m_basis = roots[:2] + (_vec(0, 0, 2, 0), _vec(-1, -1, -1, 1))
            return TypeData(tid, 4, (1, 2, 3, 4, 2), (1, 2, 3, 2, 1), 12, 4, 1,
                            roots, m_basis, None, ())
        if fam == "G" and m == 2:
            roots = (
                _vec(1, -1, 0),
                _vec(Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3)),
            )
            m_basis = (roots[0], _vec(-2, 1, 1))
            return TypeData(tid, 2, (1, 2, 3), (1, 2, 1), 6, 3, 1,
                            roots, m_basis, None, ())
    elif tw == 2:
        if fam == "A" and m == 2:
            roots = (_vec(1, -1),)
            m_basis = (_vec(Fraction(1, 2), Fraction(-1, 2)),)
            return TypeData(tid, 1, (2, 1), (1, 2), 3, 2, 2,
                            roots, m_basis, None, (1,))
        if fam == "A" and m >= 4:
            if m % 2 == 0:           # A_{2n}^{(2)}
                n = m // 2
                roots = tuple(
                    tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                          for j in range(n))
                    for i in range(n - 1)
                ) + (_unit(n, n - 1, 2),)
                m_basis = tuple(_unit(n, i) for i in range(n))
                marks = (2,) * n + (1,)
                comarks = (1,) + (2,) * n
                return TypeData(tid, n, marks, comarks, 2 * n + 1, n, 1,
                                roots, m_basis, None, (n,))
            if m % 2 == 1 and m >= 5:  # A_{2n-1}^{(2)}
                n = (m + 1) // 2
                roots = tuple(
                    tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                          for j in range(n))
                    for i in range(n - 1)
                ) + (_unit(n, n - 1, 2),)
                marks = (1, 1) + (2,) * (n - 2) + (1,)
                comarks = (1, 1) + (2,) * (n - 1)
                return TypeData(tid, n, marks, comarks, 2 * n - 1, n, 1,
                                roots, roots, None, (1, n))
        if fam == "D" and m >= 3:    # D_{n+1}^{(2)}
            n = m - 1
            roots = tuple(
                tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0)
                      for j in range(n))
                for i in range(n - 1)
            ) + (_unit(n, n - 1),)
            m_basis = tuple(_unit(n, i) for i in range(n))
            comarks = (1,) + (2,) * (n - 1) + (1,)
            return TypeData(tid, n, (1,) * (n + 1), comarks, n + 1, n, 2,
                            roots, m_basis, None, tuple(range(1, n + 1)))
        if fam == "E" and m == 6:
            roots = (
                _vec(1, -1, 0, 0),
                _vec(0, 1, -1, 0),
                _vec(0, 0, 2, 0),
                _vec(-1, -1, -1, 1),
            )
            return TypeData(tid, 4, (1, 2, 3, 2, 1), (1, 2, 3, 4, 2), 9, 4, 1,
                            roots, roots, None, (4,))
    elif tw == 3:
        if fam == "D" and m == 4:
            roots = (_vec(1, -1, 0), _vec(-2, 1, 1))
            return TypeData(tid, 2, (1, 2, 1), (1, 2, 3), 4, 3, 1,
                            roots, roots, None, (2,))
    raise UnknownType(f"{tid} is not a supported affine type")


@lru_cache(maxsize=None)
def lookup_type(type_id):
    """Return the TypeData record for a type id (string or AffineTypeId)."""
    tid = AffineTypeId.parse(type_id) if isinstance(type_id, str) else type_id
    return _build_type(tid)


def all_type_ids(max_rank=4):
    """All supported type-id strings with rank (n) at most max_rank."""
    ids = []
    for n in range(1, max_rank + 1):
        ids.append(f"A{n}_1")
    for n in range(3, max_rank + 1):
        ids.append(f"B{n}_1")
    for n in range(2, max_rank + 1):
        ids.append(f"C{n}_1")
    for n in range(4, max_rank + 1):
        ids.append(f"D{n}_1")
    if max_rank >= 4:
        ids.append("F4_1")
    ids.append("G2_1")
    ids.append("A2_2")
    for n in range(2, max_rank + 1):
        ids.append(f"A{2 * n}_2")          # A_{2n}^{(2)}
    for n in range(3, max_rank + 1):
        ids.append(f"A{2 * n - 1}_2")      # A_{2n-1}^{(2)}
    for n in range(2, max_rank + 1):
        ids.append(f"D{n + 1}_2")          # D_{n+1}^{(2)}
    if max_rank >= 4:
        ids.append("E6_2")
    ids.append("D4_3")
    return ids


@lru_cache(maxsize=None)
def _root_span_solver(t):
    """Precomputed left inverse B with B . alpha_k = e_k (via the Gram matrix).

    Coefficients of v are B v; v lies in the root span iff alpha . (B v) = v.
    """
    n, dim = t.n, t.ambient_dim
    gram = [[t.inner(t.simple_roots[i], t.simple_roots[j]) for j in range(n)]
            for i in range(n)]
    inv_cols = [linalg.solve_square(gram, [Fraction(int(i == j)) for i in range(n)])
                for j in range(n)]
    gram_inv = [[inv_cols[j][i] for j in range(n)] for i in range(n)]
    b = [
        [sum(gram_inv[i][k] * t.scale_sq * t.simple_roots[k][d] for k in range(n))
         for d in range(dim)]
        for i in range(n)
    ]
    return tuple(tuple(row) for row in b)


def simple_root_coefficients(t, v):
    """Coefficients (c_1..c_n) with v = sum c_i alpha_i in stored coordinates."""
    v = tuple(Fraction(x) for x in v)
    b = _root_span_solver(t)
    coeffs = tuple(sum(row[d] * v[d] for d in range(t.ambient_dim)) for row in b)
    for d in range(t.ambient_dim):
        if sum(coeffs[k] * t.simple_roots[k][d] for k in range(t.n)) != v[d]:
            raise NotInRootSpan(f"{v} is not in the root span of {t.name}")
    return coeffs


@lru_cache(maxsize=None)
def fundamental_weights(t):
    """The finite fundamental weights omega_1..omega_n in stored coordinates.

    omega_i is the unique vector in the root span with
    2 (omega_i | alpha_j) / |alpha_j|^2 = delta_ij.
    """
    n = t.n
    # Row j of the system: sum_k x_k <alpha_k, alpha_j^vee> = delta_ij.
    cartan_t = [
        [2 * t.inner(t.simple_roots[k], t.simple_roots[j]) / t.inner(t.simple_roots[j], t.simple_roots[j])
         for k in range(n)]
        for j in range(n)
    ]
    weights = []
    for i in range(n):
        rhs = [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        x = linalg.solve_square(cartan_t, rhs)
        weights.append(tuple(
            sum(x[k] * t.simple_roots[k][d] for k in range(n))
            for d in range(t.ambient_dim)
        ))
    return tuple(weights)


def theta(t):
    """The marked root sum_{i>=1} a_i alpha_i in stored coordinates."""
    return tuple(
        sum(t.marks[i + 1] * t.simple_roots[i][d] for i in range(t.n))
        for d in range(t.ambient_dim)
    )
