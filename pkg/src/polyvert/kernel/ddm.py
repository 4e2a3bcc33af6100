"""Incremental double description method on homogeneous integer cones.

A :class:`HomCone` is the pair (constraints, generators) of a polyhedral cone
``{y : a.y <= 0 for a in constraints} = cone(rays) + span(lines)``.  All vectors
are primitive integer tuples so that every step is pure integer arithmetic.
Adding a constraint returns a new object; nothing is mutated.
"""

from math import gcd


def _prim(v):
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class HomCone:
    """Polyhedral cone in Z^n given by both descriptions.

    ``masks[i]`` is a bitmask of the constraint indices tight at ``rays[i]``.
    """

    __slots__ = ("n", "constraints", "rays", "masks", "lines")

    def __init__(self, n, constraints, rays, masks, lines):
        self.n = n
        self.constraints = constraints
        self.rays = rays
        self.masks = masks
        self.lines = lines

    @classmethod
    def full(cls, n):
        lines = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(n, (), (), (), lines)

    @classmethod
    def from_constraints(cls, n, constraints):
        cone = cls.full(n)
        for a in constraints:
            cone = cone.add(a)
        return cone

    @property
    def lineality_dim(self):
        return len(self.lines)

    def values(self, a):
        return [_dot(a, r) for r in self.rays], [_dot(a, l) for l in self.lines]

    def add(self, a):
        """Intersect with the halfspace ``a.y <= 0``."""
        a = _prim(tuple(a))
        idx = len(self.constraints)
        bit = 1 << idx
        constraints = self.constraints + (a,)
        lvals = [_dot(a, l) for l in self.lines]
        j = next((i for i, v in enumerate(lvals) if v != 0), None)
        if j is not None:
            l0 = self.lines[j]
            s0 = lvals[j]
            if s0 > 0:
                l0 = tuple(-x for x in l0)
                s0 = -s0
            k = -s0
            lines = []
            for i, l in enumerate(self.lines):
                if i == j:
                    continue
                v = lvals[i]
                if v == 0:
                    lines.append(l)
                else:
                    lines.append(_prim(tuple(k * x + v * y for x, y in zip(l, l0))))
            rays, masks = [], []
            for r, m in zip(self.rays, self.masks):
                v = _dot(a, r)
                if v == 0:
                    rays.append(r)
                else:
                    rays.append(_prim(tuple(k * x + v * y for x, y in zip(r, l0))))
                masks.append(m | bit)
            rays.append(l0)
            masks.append(bit - 1)
            return HomCone(self.n, constraints, tuple(rays), tuple(masks), tuple(lines))

        pos, neg, keep, keep_masks = [], [], [], []
        for i, (r, m) in enumerate(zip(self.rays, self.masks)):
            v = _dot(a, r)
            if v > 0:
                pos.append((i, r, m, v))
            elif v < 0:
                neg.append((i, r, m, v))
                keep.append(r)
                keep_masks.append(m)
            else:
                keep.append(r)
                keep_masks.append(m | bit)
        if not pos:
            return HomCone(self.n, constraints, self.rays,
                           tuple(m | bit if _dot(a, r) == 0 else m
                                 for r, m in zip(self.rays, self.masks)),
                           self.lines)
        need = self.n - len(self.lines) - 2
        all_masks = self.masks
        for ip, rp, mp, vp in pos:
            for jn, rn, mn, vn in neg:
                z = mp & mn
                if bin(z).count("1") < need:
                    continue
                adjacent = True
                for t, m in enumerate(all_masks):
                    if t != ip and t != jn and (m & z) == z:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                new = tuple(vp * x - vn * y for x, y in zip(rn, rp))
                keep.append(_prim(new))
                keep_masks.append(z | bit)
        return HomCone(self.n, constraints, tuple(keep), tuple(keep_masks), self.lines)
