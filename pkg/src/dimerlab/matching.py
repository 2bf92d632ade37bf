"""Perfect matchings and the matching polygon."""

from dataclasses import dataclass

from . import lattice
from .dimer import DimerError
from .homology import pairing


def enumerate_matchings(d):
    """All perfect matchings as a deterministically ordered list of frozensets.

    Exact cover by depth-first search: columns are faces, rows are arrows
    covering their two incident faces; the most constrained face is branched
    first.  Output is sorted lexicographically by sorted arrow tuple.
    """
    fids = d.faces()
    incident = {a: d.faces_of_arrow(a) for a in d.arrows()}
    members = {f: tuple(d.face_arrows(f)) for f in fids}

    uncovered = set(fids)
    available = {a for a in d.arrows()}
    chosen = []
    out = []

    def candidates(f):
        return [a for a in members[f] if a in available]

    def solve():
        if not uncovered:
            out.append(frozenset(chosen))
            return
        f = min(uncovered, key=lambda f: (len(candidates(f)), abs(f), 0 if f > 0 else 1))
        for a in sorted(candidates(f)):
            fp, fn = incident[a]
            uncovered.discard(fp)
            uncovered.discard(fn)
            removed = [b for b in available
                       if b in members[fp] or b in members[fn]]
            for b in removed:
                available.discard(b)
            chosen.append(a)
            if all(any(b in available for b in members[g]) for g in uncovered):
                solve()
            chosen.pop()
            for b in removed:
                available.add(b)
            uncovered.add(fp)
            uncovered.add(fn)

    solve()
    return sorted(out, key=lambda m: tuple(sorted(m)))


def brute_force_matchings(d):
    """Independent oracle: try all 2^E arrow subsets (tiny dimers only)."""
    from itertools import combinations
    fids = d.faces()
    out = []
    n = len(fids)
    arrows = list(d.arrows())
    # every matching has exactly one arrow per face and each arrow covers 2
    size = n // 2 if n % 2 == 0 else None
    sizes = [size] if size else range(len(arrows) + 1)
    for k in sizes:
        for sub in combinations(arrows, k):
            s = set(sub)
            if all(sum(1 for a in d.face_arrows(f) if a in s) == 1 for f in fids):
                out.append(frozenset(s))
    return sorted(set(out), key=lambda m: tuple(sorted(m)))


def matching_point(matching, hom):
    """Lattice point (<P, z_1>, <P, z_2>, ...) of a matching."""
    return tuple(pairing(z, matching) for z in hom.basis_chains)


@dataclass
class MatchingPolygon:
    points: dict          # lattice point -> list of matching indices
    hull: list            # corner points, counterclockwise
    boundary_count: int   # lattice points on the hull boundary
    interior_count: int   # lattice points strictly inside
    edge_normals: list    # (primitive outward normal, lattice length) per edge

    def invariants(self):
        return lattice.polygon_invariants(list(self.points))

    def multiplicity(self, pt):
        return len(self.points.get(pt, ()))

    def corner_points(self):
        return [tuple(p) for p in self.hull]


def matching_polygon(d, hom, matchings=None):
    """Matching polygon of a torus dimer: hull of the matching lattice points."""
    hom.require_torus()
    if matchings is None:
        matchings = enumerate_matchings(d)
    if not matchings:
        raise DimerError("no perfect matchings")
    points = {}
    for i, m in enumerate(matchings):
        points.setdefault(matching_point(m, hom), []).append(i)
    hull = lattice.convex_hull(list(points))
    return MatchingPolygon(
        points=points,
        hull=hull,
        boundary_count=lattice.boundary_lattice_count(hull),
        interior_count=lattice.interior_lattice_count(hull),
        edge_normals=lattice.edge_data(hull),
    )
