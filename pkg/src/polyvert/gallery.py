"""Named example scenes.

Every scene is stored as its JSON dictionary so it can be dumped, parsed
back and compared byte for byte.  Irrational classical coordinates are
replaced by rational ones with the same combinatorics.
"""

import random
from fractions import Fraction

from .kernel import linalg as la
from .kernel.polyhedron import ConvexPolyhedron

SCHONHARDT_TWIST = (Fraction(3, 5), Fraction(4, 5))


def _s(x):
    return la.fraction_str(Fraction(x))


def _pts(points):
    return [[_s(c) for c in p] for p in points]


def _term(coeff, poly):
    return {"coefficient": _s(coeff), "polyhedron": poly}


def _vpoly(vertices, rays=()):
    out = {"vertices": _pts(vertices)}
    if rays:
        out["rays"] = _pts(rays)
    return out


def _hpoly(rows):
    return {"halfspaces": [[_s(c) for c in r] for r in rows]}


def _box(lo, hi):
    rows = []
    d = len(lo)
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append(e + [hi[i]])
        rows.append([-c for c in e] + [-lo[i]])
    return _hpoly(rows)


def _scene(name, d, terms, note):
    return {"name": name, "dimension": d, "description": note, "terms": terms}


def square():
    return _scene("square", 2, [_term(1, _box([0, 0], [1, 1]))], "unit square")


def cube():
    return _scene("cube", 3, [_term(1, _box([0, 0, 0], [1, 1, 1]))], "unit cube")


def lshape():
    return _scene("lshape", 2, [_term(1, _box([0, 0], [2, 2])), _term(-1, _box([1, 1], [2, 2]))],
                  "L-shape: [0,2]^2 minus [1,2]^2")


def triangle():
    return _scene("triangle", 2, [_term(1, _vpoly([(0, 0), (1, 0), (0, 1)]))], "standard triangle")


def interval():
    return _scene("interval", 1, [_term(1, _box([0], [1]))], "unit interval")


def interval_pair():
    return _scene("interval_pair", 1, [_term(1, _box([0], [1])), _term(-1, _box([2], [3]))],
                  "[0,1] minus [2,3]")


def halfplane():
    return _scene("halfplane", 2, [_term(1, _hpoly([[0, -1, 0]]))],
                  "half-plane y >= 0, a line-cone")


def quadrant():
    return _scene("quadrant", 2, [_term(1, _vpoly([(0, 0)], [(1, 0), (0, 1)]))],
                  "positive quadrant")


def fig3():
    sectors = [[(1, 0), (1, 1)], [(0, 1), (-1, 0)], [(-1, -1), (0, -1)]]
    return _scene("fig3", 2, [_term(1, _vpoly([(0, 0)], r)) for r in sectors],
                  "three alternate sectors cut by the lines through the origin with "
                  "directions (1,0), (1,1), (0,1); zero transform at the apex")


def fig1():
    a = _box([-1, -1, -1], [0, 0, 1])
    b = _hpoly([[-1, -1, 1, 0], [-1, -1, -1, 0], [1, 1, 0, 1], [1, -1, 0, 1], [-1, 1, 0, 1]])
    return _scene("fig1", 3, [_term(1, a), _term(1, b)],
                  "two solids whose edges (along z and along x - y) touch only at the origin")


def bowtie():
    return _scene("bowtie", 2, [_term(1, _vpoly([(0, 0), (-1, 1), (-1, -1)])),
                                _term(1, _vpoly([(0, 0), (1, 1), (1, -1)]))],
                  "two triangles meeting at a common vertex")


def schonhardt_points(twist=SCHONHARDT_TWIST):
    c, s = twist
    base = [(Fraction(1), Fraction(0)), (Fraction(-1, 2), Fraction(7, 8)),
            (Fraction(-1, 2), Fraction(-7, 8))]
    low = [(x, y, Fraction(0)) for x, y in base]
    high = [(c * x - s * y, s * x + c * y, Fraction(1)) for x, y in base]
    return low, high


def schonhardt():
    low, high = schonhardt_points()
    terms = [_term(1, _vpoly(low + high))]
    for i in range(3):
        j = (i + 1) % 3
        terms.append(_term(-1, _vpoly([low[i], low[j], high[i], high[j]])))
    return _scene("schonhardt", 3, terms,
                  "twisted prism: hull of a rational triangle and its copy rotated by "
                  "cos = 3/5, sin = 4/5, minus the three side tetrahedra")


def random_polytope(seed, max_vertices=10, box=4):
    """Hull of seeded integer points in [-box, box]^3 with at most ``max_vertices`` vertices."""
    rng = random.Random(seed)
    while True:
        pts = {tuple(rng.randint(-box, box) for _ in range(3)) for _ in range(rng.randint(5, 9))}
        poly = ConvexPolyhedron.from_generators(sorted(pts))
        if poly.dim == 3 and len(poly.vertices) <= max_vertices:
            return poly


def random_scene(k, seed=0):
    poly = random_polytope(1000 * seed + k)
    return _scene(f"random{k}", 3, [_term(1, _vpoly(poly.vertices))],
                  f"hull of seeded random integer points (scene seed {seed})")


def catalogue(seed=0):
    """All gallery scenes as JSON dictionaries, in a fixed order."""
    scenes = [square(), cube(), lshape(), triangle(), interval(), interval_pair(), halfplane(),
              quadrant(), fig3(), fig1(), bowtie(), schonhardt()]
    scenes += [random_scene(k, seed) for k in (1, 2, 3)]
    return {s["name"]: s for s in scenes}


def names():
    return list(catalogue())
