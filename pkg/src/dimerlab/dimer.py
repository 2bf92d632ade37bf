"""Dimer quivers on closed oriented surfaces.

A dimer is stored canonically as the pair of face permutations
(sigma_plus, sigma_minus) on arrow ids together with head/tail maps.
Faces are serialized as cyclic arrow sequences a0 a1 ... a{k-1} with
t(a_i) = h(a_{i+1 mod k}), i.e. consecutive entries compose as paths;
walking order around the face is the reverse of file order.  sigma(a) is
the arrow walked immediately after a, so sigma(a_i) = a_{i-1}.

Vertices are recovered as the cycles of sigma_minus^{-1} . sigma_plus
(head-stars); this fixes the global orientation convention.
"""

from dataclasses import dataclass, field
from fractions import Fraction


class DimerError(ValueError):
    """Raised on malformed dimer data or violated invariants."""


def _sigma_from_faces(faces, sign, errors):
    sigma = {}
    seen = {}
    for fi, face in enumerate(faces):
        k = len(face)
        for i, a in enumerate(face):
            if a in seen:
                errors.append("arrow %d in 2 %s faces" % (a, sign))
            seen[a] = fi
            sigma[a] = face[i - 1]
    return sigma, seen


def _cycles_of(perm):
    seen = set()
    cycles = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(tuple(cyc))
    return cycles


@dataclass(frozen=True)
class Dimer:
    """Validated dimer quiver; immutable after construction."""

    name: str
    arrow_count: int
    head: dict
    tail: dict
    pos_faces: tuple
    neg_faces: tuple
    sigma_plus: dict = field(compare=False)
    sigma_minus: dict = field(compare=False)

    # -- construction -----------------------------------------------------

    @staticmethod
    def build(name, arrow_count, head, tail, pos_faces, neg_faces):
        errors = []
        arrows = range(1, arrow_count + 1)
        for a in arrows:
            if a not in head or a not in tail:
                raise DimerError("arrow %d missing head/tail" % a)
        sp, seen_p = _sigma_from_faces(pos_faces, "positive", errors)
        sm, seen_m = _sigma_from_faces(neg_faces, "negative", errors)
        for a in arrows:
            if a not in seen_p:
                errors.append("arrow %d in 0 positive faces" % a)
            if a not in seen_m:
                errors.append("arrow %d in 0 negative faces" % a)
        for a in list(sp) + list(sm):
            if not 1 <= a <= arrow_count:
                errors.append("face mentions unknown arrow %d" % a)
        if errors:
            raise DimerError("; ".join(sorted(set(errors))))
        for faces in (pos_faces, neg_faces):
            for face in faces:
                k = len(face)
                for i in range(k):
                    a, b = face[i], face[(i + 1) % k]
                    if tail[a] != head[b]:
                        raise DimerError(
                            "non-composable face %s: t(%d)=%d != h(%d)=%d"
                            % (list(face), a, tail[a], b, head[b]))
        d = Dimer(name, arrow_count, dict(head), dict(tail),
                  tuple(tuple(f) for f in pos_faces),
                  tuple(tuple(f) for f in neg_faces), sp, sm)
        d._check_head_stars()
        return d

    def _check_head_stars(self):
        smi = {v: k for k, v in self.sigma_minus.items()}
        rho = {a: smi[self.sigma_plus[a]] for a in self.arrows()}
        for cyc in _cycles_of(rho):
            heads = {self.head[a] for a in cyc}
            if len(heads) != 1:
                raise DimerError(
                    "head-star mismatch (not a surface embedding): "
                    "cycle %s has heads %s" % (list(cyc), sorted(heads)))
        covered = {self.head[a] for a in self.arrows()}
        missing = set(self.vertices()) - covered
        if missing:
            raise DimerError("vertices %s are the head of no arrow"
                             % sorted(missing))

    # -- basic accessors ---------------------------------------------------

    def arrows(self):
        return range(1, self.arrow_count + 1)

    def vertices(self):
        return sorted({*self.head.values(), *self.tail.values()})

    def vertex_count(self):
        return len({*self.head.values(), *self.tail.values()})

    def face_count(self):
        return len(self.pos_faces) + len(self.neg_faces)

    def faces(self):
        """Signed face ids: +i for pos_faces[i-1], -i for neg_faces[i-1]."""
        return ([i + 1 for i in range(len(self.pos_faces))]
                + [-(i + 1) for i in range(len(self.neg_faces))])

    def face_arrows(self, fid):
        return self.pos_faces[fid - 1] if fid > 0 else self.neg_faces[-fid - 1]

    def face_sigma(self, fid):
        return self.sigma_plus if fid > 0 else self.sigma_minus

    def faces_of_arrow(self, a):
        pos = next(i + 1 for i, f in enumerate(self.pos_faces) if a in f)
        neg = next(-(i + 1) for i, f in enumerate(self.neg_faces) if a in f)
        return pos, neg

    def other_face(self, a, fid):
        pos, neg = self.faces_of_arrow(a)
        return neg if fid == pos else pos

    def head_star(self, v):
        return sorted(a for a in self.arrows() if self.head[a] == v)

    def vertex_rotations(self):
        """Anticlockwise cyclic dart order at every vertex.

        Darts are ('h', a) for the end of arrow a at its head and ('t', a)
        for the end at its tail.  Around a vertex the incoming darts follow
        the inverse head-star permutation and between consecutive incoming
        arrows a, a' sits the outgoing dart of sigma_plus(a').
        """
        smi = {v: k for k, v in self.sigma_minus.items()}
        rho = {a: smi[self.sigma_plus[a]] for a in self.arrows()}
        rho_inv = {v: k for k, v in rho.items()}
        out = {}
        seen = set()
        for a0 in sorted(self.arrows()):
            if a0 in seen:
                continue
            order = []
            a = a0
            while True:
                seen.add(a)
                order.append(('h', a))
                nxt = rho_inv[a]
                order.append(('t', self.sigma_plus[nxt]))
                a = nxt
                if a == a0:
                    break
            out[self.head[a0]] = order
        return out

    # -- invariants ---------------------------------------------------------

    def euler_characteristic(self):
        return self.vertex_count() - self.arrow_count + self.face_count()

    def genus(self):
        chi = self.euler_characteristic()
        if chi % 2:
            raise DimerError("odd Euler characteristic %d: corrupted data" % chi)
        return (2 - chi) // 2

    def is_connected(self):
        verts = self.vertices()
        if not verts:
            return True
        adj = {v: set() for v in verts}
        for a in self.arrows():
            adj[self.head[a]].add(self.tail[a])
            adj[self.tail[a]].add(self.head[a])
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    # -- duality -------------------------------------------------------------

    def mirror(self):
        """The specular dual: sigma_plus kept, sigma_minus inverted.

        New vertices are the cycles of sigma_minus . sigma_plus, numbered in
        order of their smallest arrow id.
        """
        sp = self.sigma_plus
        smi = {v: k for k, v in self.sigma_minus.items()}  # new sigma_minus
        rho = {a: self.sigma_minus[sp[a]] for a in self.arrows()}
        cycles = sorted(_cycles_of(rho), key=min)
        new_head = {}
        for vid, cyc in enumerate(cycles, start=1):
            for a in cyc:
                new_head[a] = vid
        spi = {v: k for k, v in sp.items()}
        new_tail = {a: new_head[spi[a]] for a in self.arrows()}
        pos = tuple(_face_from_sigma_cycle(sp, c) for c in _cycles_of(sp))
        neg = tuple(_face_from_sigma_cycle(smi, c) for c in _cycles_of(smi))
        return Dimer.build(self.name + "~", self.arrow_count,
                           new_head, new_tail, pos, neg)

    def same_permutation_pair(self, other):
        return (self.sigma_plus == other.sigma_plus
                and self.sigma_minus == other.sigma_minus)


def _face_from_sigma_cycle(sigma, cyc):
    """File order for the sigma-cycle: sequence b with sigma(b_i) = b_{i-1}."""
    start = min(cyc)
    out = [start]
    x = sigma[start]
    while x != start:
        out.append(x)
        x = sigma[x]
    # out is (a, sigma(a), sigma^2(a), ...) = reversed walking successor list;
    # file order must satisfy sigma(b_i) = b_{i-1}: reverse everything after a.
    return tuple([start] + out[:0:-1])


def surface_invariants(d):
    """(Euler characteristic, genus) of the surface carrying the dimer."""
    return d.euler_characteristic(), d.genus()


# -- dimer text format (DTF) --------------------------------------------------


def parse_dimer(text):
    """Parse the line-based dimer text format; '#' starts a comment."""
    name = None
    nvertices = None
    head, tail = {}, {}
    pos, neg = [], []
    ended = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise DimerError("line %d: content after 'end'" % ln)
        tok = line.split()
        try:
            if tok[0] == "dimer":
                name = tok[1] if len(tok) > 1 else ""
            elif tok[0] == "vertices":
                nvertices = int(tok[1])
            elif tok[0] == "arrow":
                a, h, t = int(tok[1]), int(tok[2]), int(tok[3])
                if a in head:
                    raise DimerError("line %d: duplicate arrow %d" % (ln, a))
                head[a], tail[a] = h, t
            elif tok[0] == "face":
                sign, ids = tok[1], [int(x) for x in tok[2:]]
                if not ids:
                    raise DimerError("line %d: empty face" % ln)
                (pos if sign == "+" else neg if sign == "-" else
                 _bad_sign(ln)).append(tuple(ids))
            elif tok[0] == "end":
                ended = True
            else:
                raise DimerError("line %d: unknown directive %r" % (ln, tok[0]))
        except (IndexError, ValueError) as e:
            if isinstance(e, DimerError):
                raise
            raise DimerError("line %d: syntax error in %r" % (ln, raw)) from e
    if name is None:
        raise DimerError("missing 'dimer <name>' header")
    if not head:
        raise DimerError("no arrows")
    count = max(head)
    if sorted(head) != list(range(1, count + 1)):
        raise DimerError("arrow ids must be 1..E without gaps")
    if nvertices is not None:
        labels = set(head.values()) | set(tail.values())
        if labels != set(range(1, nvertices + 1)):
            raise DimerError("vertex labels %s do not match 'vertices %d'"
                             % (sorted(labels), nvertices))
    return Dimer.build(name, count, head, tail, pos, neg)


def _bad_sign(ln):
    raise DimerError("line %d: face sign must be + or -" % ln)


def _canonical_faces(faces):
    rotated = []
    for f in faces:
        i = f.index(min(f))
        rotated.append(f[i:] + f[:i])
    return tuple(sorted(rotated))


def format_dimer(d):
    """Canonical normal form: vertices relabeled by smallest incident arrow
    head, faces rotated to start at their smallest arrow and sorted."""
    order = {}
    for v in sorted(set(d.head.values()),
                    key=lambda v: min(a for a in d.arrows() if d.head[a] == v)):
        order[v] = len(order) + 1
    lines = ["dimer %s" % d.name, "vertices %d" % d.vertex_count()]
    for a in d.arrows():
        lines.append("arrow %d %d %d" % (a, order[d.head[a]], order[d.tail[a]]))
    for f in _canonical_faces(d.pos_faces):
        lines.append("face + " + " ".join(str(a) for a in f))
    for f in _canonical_faces(d.neg_faces):
        lines.append("face - " + " ".join(str(a) for a in f))
    lines.append("end")
    return "\n".join(lines) + "\n"


# -- weight / representation files --------------------------------------------


def parse_valued_lines(text, keyword):
    """Parse lines '<keyword> <arrow-id> <rational>' into {id: Fraction}."""
    out = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] != keyword or len(tok) != 3:
            raise DimerError("line %d: expected '%s <id> <p/q>'" % (ln, keyword))
        out[int(tok[1])] = Fraction(tok[2])
    return out


def parse_weights(text):
    return parse_valued_lines(text, "weight")


def parse_representation(text):
    return parse_valued_lines(text, "rep")
