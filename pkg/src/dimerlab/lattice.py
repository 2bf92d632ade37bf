"""Exact 2d lattice geometry: hulls, lattice point counts, angular order.

Everything here works over plain Python integers and fractions.Fraction;
no floating point.
"""

from fractions import Fraction
from math import gcd


def primitive(v):
    """Primitive integer vector in the direction of v (v != 0)."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    g = gcd(abs(x), abs(y))
    return (x // g, y // g)


def lattice_length(p, q):
    """Number of lattice steps along the segment p-q (gcd of the deltas)."""
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Corners of the convex hull in counterclockwise order.

    Collinear non-corner points are dropped.  Degenerate inputs return the
    hull of whatever dimension the points span (1 or 2 points possible).
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all collinear
        return [pts[0], pts[-1]]
    return hull


def twice_area(hull):
    """Twice the (positive) area of a CCW polygon, exactly."""
    s = 0
    n = len(hull)
    for i in range(n):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return abs(s)


def boundary_lattice_count(hull):
    """Number of lattice points on the boundary of the hull polygon."""
    if len(hull) == 1:
        return 1
    if len(hull) == 2:
        return lattice_length(hull[0], hull[1]) + 1
    return sum(lattice_length(hull[i], hull[(i + 1) % len(hull)])
               for i in range(len(hull)))


def interior_lattice_count(hull):
    """Number of lattice points strictly inside the hull (Pick's theorem)."""
    if len(hull) <= 2:
        return 0
    b = boundary_lattice_count(hull)
    a2 = twice_area(hull)
    # Pick: A = I + B/2 - 1  =>  2I = 2A - 2B/2*... rearranged below
    return (a2 - b + 2) // 2


def edge_data(hull):
    """List of (primitive outward normal, lattice length) per CCW hull edge."""
    out = []
    n = len(hull)
    for i in range(n):
        p, q = hull[i], hull[(i + 1) % n]
        d = (q[0] - p[0], q[1] - p[1])
        dp = primitive(d)
        # CCW polygon: outward normal is d rotated by -90 degrees
        out.append(((dp[1], -dp[0]), lattice_length(p, q)))
    return out


def point_in_hull(pt, hull):
    """Is pt inside or on the boundary of the CCW hull?"""
    if len(hull) == 1:
        return pt == hull[0]
    if len(hull) == 2:
        p, q = hull
        if cross(p, q, pt) != 0:
            return False
        return (min(p[0], q[0]) <= pt[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= pt[1] <= max(p[1], q[1]))
    n = len(hull)
    return all(cross(hull[i], hull[(i + 1) % n], pt) >= 0 for i in range(n))


def on_hull_boundary(pt, hull):
    if len(hull) <= 2:
        return point_in_hull(pt, hull)
    n = len(hull)
    for i in range(n):
        p, q = hull[i], hull[(i + 1) % n]
        if cross(p, q, pt) == 0 and point_in_hull(pt, [p, q]):
            return True
    return False


def polygon_invariants(points):
    """Basis-independent description of the lattice polygon spanned by points.

    Returns a dict with corner, boundary and interior lattice point counts,
    twice the area, and the sorted multiset of edge lattice lengths.  These
    are exactly the quantities preserved by integral-affine maps, so they are
    the only values cross-run comparisons may pin.
    """
    hull = convex_hull(points)
    if len(hull) <= 2:
        b = boundary_lattice_count(hull)
        return {"corners": len(hull), "boundary": b, "interior": 0,
                "twice_area": 0,
                "edge_lengths": tuple(sorted(
                    [lattice_length(hull[0], hull[-1])] if len(hull) == 2 else []))}
    return {
        "corners": len(hull),
        "boundary": boundary_lattice_count(hull),
        "interior": interior_lattice_count(hull),
        "twice_area": twice_area(hull),
        "edge_lengths": tuple(sorted(l for _, l in edge_data(hull))),
    }


def angle_key(v):
    """Sort key giving the CCW angular order of a nonzero integer vector.

    Vectors compare by (halfplane, exact slope); within one ray all vectors
    are equal under this key.
    """
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no angle")
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # -x/y grows strictly with the angle inside each open half plane; the
    # rays at angle 0 and pi open their half planes.
    if y != 0:
        slope = Fraction(-x, y)
    else:
        slope = Fraction(-(10 ** 18))
    return (half, slope)


def cyclically_well_ordered(vectors):
    """Can the cyclic sequence of nonzero vectors be read as weakly increasing
    angles winding around exactly once (or not at all, if all rays agree)?

    Returns (ok, witness_index) where witness_index points at a violation.
    """
    n = len(vectors)
    if n == 0:
        return True, None
    keys = [angle_key(v) for v in vectors]
    wraps = 0
    first_wrap = None
    for i in range(n):
        if keys[i] > keys[(i + 1) % n]:
            wraps += 1
            if wraps > 1:
                first_wrap = (i + 1) % n
    return wraps <= 1, first_wrap


def gl2_multiset_match(a, b):
    """Is there a single G in GL2(Z) with G*a = b as multisets of vectors?

    Used to compare zigzag homology classes against polygon edge normals,
    which live in bases related by one integral-affine map.
    """
    ma = sorted(a)
    mb = sorted(b)
    if len(ma) != len(mb):
        return False
    if not ma:
        return True
    # pick two independent vectors of a
    v1 = None
    v2 = None
    for x in ma:
        if x != (0, 0):
            v1 = x
            break
    if v1 is None:
        return ma == mb
    for x in ma:
        if v1[0] * x[1] - v1[1] * x[0] != 0:
            v2 = x
            break
    if v2 is None:
        # all of a on one line; try 1d scaling maps via candidate images
        for w1 in set(mb):
            # G only constrained on the line; just compare shapes
            pass
        # fall back: compare invariant shape (multiset of pairwise dets and gcds)
        return _line_multiset_match(ma, mb)
    det = v1[0] * v2[1] - v1[1] * v2[0]
    for w1 in set(mb):
        for w2 in set(mb):
            d2 = w1[0] * w2[1] - w1[1] * w2[0]
            if d2 != det and d2 != -det:
                continue
            g = _solve_gl2(v1, v2, w1, w2)
            if g is None:
                continue
            img = sorted(_apply(g, x) for x in ma)
            if img == mb:
                return True
    return False


def _solve_gl2(v1, v2, w1, w2):
    det = v1[0] * v2[1] - v1[1] * v2[0]
    # G * v1 = w1, G * v2 = w2  =>  G = [w1 w2] * [v1 v2]^{-1}
    a, c = v1
    b, d = v2
    inv = ((d, -b), (-c, a))  # times 1/det
    m00 = w1[0] * inv[0][0] + w2[0] * inv[1][0]
    m01 = w1[0] * inv[0][1] + w2[0] * inv[1][1]
    m10 = w1[1] * inv[0][0] + w2[1] * inv[1][0]
    m11 = w1[1] * inv[0][1] + w2[1] * inv[1][1]
    if any(x % det for x in (m00, m01, m10, m11)):
        return None
    g = ((m00 // det, m01 // det), (m10 // det, m11 // det))
    gd = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if gd not in (1, -1):
        return None
    return g


def _apply(g, v):
    return (g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1])


def _line_multiset_match(ma, mb):
    ka = sorted(gcd(abs(x), abs(y)) for x, y in ma)
    kb = sorted(gcd(abs(x), abs(y)) for x, y in mb)
    return ka == kb
