"""Exact rational linear algebra on tuples of :class:`fractions.Fraction`.

Vectors are plain tuples; matrices are sequences of row tuples.  Nothing in
here ever touches a float.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational

from ..errors import NonRational


def to_fraction(x):
    """Convert ``x`` to a Fraction, refusing floats.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    """
    if isinstance(x, bool):
        raise NonRational(f"boolean {x!r} is not a rational number")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise NonRational(f"{x!r} is not an exact rational (use 'p/q')")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise NonRational(f"{x!r} is not a rational number") from exc
    raise NonRational(f"{x!r} ({type(x).__name__}) is not an exact rational")


def vec(xs):
    return tuple(to_fraction(x) for x in xs)


def zero(n):
    return (Fraction(0),) * n


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u):
    return tuple(c * a for a in u)


def neg(u):
    return tuple(-a for a in u)


def is_zero(u):
    return all(a == 0 for a in u)


def fraction_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows):
    rows = list(rows)
    if not rows:
        return 0
    return _int_rank([_integral(r) for r in rows])


def _integral(row):
    den = 1
    for a in row:
        a = Fraction(a)
        den = den * a.denominator // gcd(den, a.denominator)
    return [int(Fraction(a) * den) for a in row]


def _int_rank(m):
    # fraction-free Gaussian elimination
    m = [r[:] for r in m]
    ncols = len(m[0])
    rk = 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        piv = m[rk]
        for i in range(rk + 1, len(m)):
            if m[i][c]:
                f, g = m[i][c], piv[c]
                m[i] = [g * a - f * b for a, b in zip(m[i], piv)]
        rk += 1
        if rk == len(m):
            break
    return rk


def nullspace(rows, n):
    """Basis of ``{x : r.x = 0 for r in rows}`` in R^n (deterministic)."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    red, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def det(matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    rows = [_integral(r) for r in matrix]
    # _integral multiplied each row by its common denominator
    dens = []
    for orig in matrix:
        den = 1
        for a in orig:
            a = Fraction(a)
            den = den * a.denominator // gcd(den, a.denominator)
        dens.append(den)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    total = 1
    for d in dens:
        total *= d
    return Fraction(sign * m[n - 1][n - 1], total)


def solve(a, b):
    """Unique solution of ``a x = b`` or ``None`` when singular/inconsistent."""
    n = len(a[0])
    aug = [tuple(row) + (bb,) for row, bb in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if n in pivots or len(pivots) < n:
        return None
    return tuple(row[n] for row in red)


def primitive(v):
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    ints = _integral(v)
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def canonical_direction(v):
    """Primitive integer vector with first nonzero entry positive, plus the factor
    ``lam`` such that ``v == lam * result``."""
    p = primitive(v)
    if next(a for a in p if a != 0) < 0:
        p = tuple(-a for a in p)
    i = next(i for i, a in enumerate(p) if a != 0)
    return p, Fraction(v[i]) / p[i]


def independent_subset(vectors):
    """Indices of a maximal linearly independent prefix-greedy subset."""
    chosen, rows = [], []
    for i, v in enumerate(vectors):
        if rank(rows + [v]) > len(rows):
            rows.append(v)
            chosen.append(i)
    return chosen
