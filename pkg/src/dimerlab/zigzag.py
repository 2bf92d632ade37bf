"""Zigzag cycles and consistency testing.

A zigzag cycle alternates steps along the positive and negative face
permutations: a_{i+1} = sigma_plus(a_i) at even i and sigma_minus(a_i) at
odd i.  States (arrow, parity) make this a permutation of 2E states whose
cycles project onto the zigzag cycles; each arrow occurs at exactly one
even-position state and one odd-position state.
"""

from dataclasses import dataclass, field

from . import lattice


@dataclass(frozen=True)
class ZigzagCycle:
    arrows: tuple          # a_0, a_1, ... alternating; even positions via sigma_plus
    hclass: tuple = None
    even_support: frozenset = field(default=None, compare=False)

    def __len__(self):
        return len(self.arrows)


def _state_cycles(d):
    cycles = []
    seen = set()
    for a in sorted(d.arrows()):
        for p in (0, 1):
            if (a, p) in seen:
                continue
            cyc = []
            x = (a, p)
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                arr, par = x
                nxt = d.sigma_plus[arr] if par == 0 else d.sigma_minus[arr]
                x = (nxt, 1 - par)
            cycles.append(cyc)
    return cycles


def zigzag_cycles(d, hom=None):
    """All zigzag cycles, each normalized to start at an even position."""
    out = []
    for cyc in _state_cycles(d):
        # rotate so position 0 is an even (sigma_plus) state with minimal arrow
        evens = [i for i, (_, p) in enumerate(cyc) if p == 0]
        start = min(evens, key=lambda i: cyc[i][0])
        arrs = tuple(cyc[(start + k) % len(cyc)][0] for k in range(len(cyc)))
        even = frozenset(cyc[i][0] for i in evens)
        hcl = None
        if hom is not None:
            chain = {}
            for a in arrs:
                chain[a] = chain.get(a, 0) + 1
            hcl = hom.class_of(chain)
        out.append(ZigzagCycle(arrs, hcl, even))
    return sorted(out, key=lambda z: z.arrows)


def zig_cycle_of(d, a):
    """The zigzag cycle through state (a, even)."""
    cyc = [(a, 0)]
    x = (d.sigma_plus[a], 1)
    while x != (a, 0):
        cyc.append(x)
        arr, par = x
        nxt = d.sigma_plus[arr] if par == 0 else d.sigma_minus[arr]
        x = (nxt, 1 - par)
    return cyc


@dataclass
class ConsistencyReport:
    well_ordered: bool
    well_ordered_witness: dict       # face id -> cyclic class sequence on failure
    ray_check: bool
    ray_witnesses: list              # (arrow, shared arrow, offset) triples
    zero_class: list                 # zigzag cycles with hclass == 0
    double_turn_warnings: list       # (face id, zigzag) seen twice in one face
    consistent: bool


def _ray(d, hom, a, zig, steps):
    """Lifted ray: list of (arrow, offset in Z^rank); index 0 is (a, 0)."""
    incr = {b: hom.arrow_class(b) for b in d.arrows()}
    out = []
    off = tuple([0] * hom.h1_rank)
    x = a
    par = 0 if zig else 1
    for _ in range(steps):
        out.append((x, off))
        off = tuple(o + i for o, i in zip(off, incr[x]))
        x = d.sigma_plus[x] if par == 0 else d.sigma_minus[x]
        par = 1 - par
    return out


def is_consistent(d, hom):
    """Zigzag-consistency report.

    The authoritative test on the torus is well-orderedness: around every
    positive face the homology classes of the zig-turns must be weakly
    cyclically ordered with a single wrap.  A bounded ray-overlap check in
    the abelian cover corroborates it (and is the verdict off the torus,
    where well-orderedness is not defined).
    """
    zz = zigzag_cycles(d, hom)
    owner = {}
    for z in zz:
        for i, a in enumerate(z.arrows):
            if i % 2 == 0:
                owner[a] = z

    zero = [z for z in zz if z.hclass is not None and not any(z.hclass)]

    torus = hom.is_torus()
    well = True
    witness = {}
    double = []
    if torus:
        for fi, face in enumerate(d.pos_faces):
            # anticlockwise walking order is the reverse of file order; the
            # turn classes must then wind anticlockwise exactly once (the
            # basis is normalized to the surface orientation).
            walk = tuple(reversed(face))
            turns = [owner[a] for a in walk]
            seen = {}
            for z in turns:
                seen[z.arrows] = seen.get(z.arrows, 0) + 1
            for arrs, cnt in seen.items():
                if cnt > 1:
                    double.append((fi + 1, arrs))
            classes = [z.hclass for z in turns]
            if any(not any(c) for c in classes):
                well = False
                witness[fi + 1] = classes
                continue
            keys = [lattice.angle_key(c) for c in classes]
            wraps = sum(1 for i in range(len(keys))
                        if keys[i] > keys[(i + 1) % len(keys)])
            # ties between turns of the same zigzag cycle are not allowed;
            # equal classes of distinct cycles may tie.
            k = len(turns)
            same_adjacent = k > 1 and any(
                turns[i].arrows == turns[(i + 1) % k].arrows for i in range(k))
            ok = (wraps == 1 or len(set(keys)) == 1) and not same_adjacent
            if not ok:
                well = False
                witness[fi + 1] = classes

    steps = max(4 * d.face_count(), max((2 * len(z) for z in zz), default=0))
    ray_ok = True
    ray_wit = []
    for a in d.arrows():
        zig = _ray(d, hom, a, True, steps)
        zag = _ray(d, hom, a, False, steps)
        zag_set = {}
        for x, off in zag[1:]:
            zag_set.setdefault((x, off), True)
        for x, off in zig[1:]:
            if (x, off) in zag_set and (x, off) != (a, tuple([0] * hom.h1_rank)):
                ray_ok = False
                ray_wit.append((a, x, off))
                break

    verdict = (well and not zero) if torus else (ray_ok and not zero)
    return ConsistencyReport(well, witness, ray_ok, ray_wit, zero, double, verdict)
