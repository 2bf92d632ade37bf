"""Integer homology of the surface carried by a dimer.

The first homology H1 = ker d1 / im d2 is computed from the fundamental
cycles of a BFS spanning tree and a Smith normal form of the face-boundary
matrix expressed in that cycle basis.  All choices are pinned (BFS from
vertex 1, arrows tried in increasing id, pivot of smallest absolute value
then lowest index) so matching polygons are reproducible across runs.
"""

from dataclasses import dataclass, field

from .dimer import DimerError


def _smith_normal_form(mat, n):
    """Smith normal form of an n x m integer matrix given as list of rows.

    Returns (diag, U, Uinv) with U*M*V = D for some V (not tracked); U and
    Uinv are n x n unimodular with U*Uinv = I.
    """
    m = len(mat[0]) if mat else 0
    M = [row[:] for row in mat]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Uinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, c):
        # row i += c * row j ; inverse: column j of Uinv -= c * column i
        M[i] = [x + c * y for x, y in zip(M[i], M[j])]
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]
        for r in Uinv:
            r[j] -= c * r[i]

    def row_neg(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]

    def col_add(i, j, c):
        for r in M:
            r[i] += c * r[j]

    rank = 0
    k = 0
    while k < min(n, m):
        piv = None
        best = None
        for i in range(k, n):
            for j in range(k, m):
                v = abs(M[i][j])
                if v and (best is None or v < best):
                    best, piv = v, (i, j)
        if piv is None:
            break
        row_swap(k, piv[0])
        col_swap(k, piv[1])
        while True:
            if M[k][k] < 0:
                row_neg(k)
            done = True
            for i in range(k + 1, n):
                if M[i][k]:
                    q = M[i][k] // M[k][k]
                    row_add(i, k, -q)
                    if M[i][k]:
                        row_swap(k, i)
                        done = False
            for j in range(k + 1, m):
                if M[k][j]:
                    q = M[k][j] // M[k][k]
                    col_add(j, k, -q)
                    if M[k][j]:
                        col_swap(k, j)
                        done = False
            if done:
                break
        rank += 1
        k += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if b % a:
                col_add(i, i + 1, 1)
                while True:
                    if M[i][i] < 0:
                        row_neg(i)
                    q = M[i + 1][i] // M[i][i]
                    row_add(i + 1, i, -q)
                    if M[i + 1][i] == 0:
                        break
                    row_swap(i, i + 1)
                q = M[i][i + 1] // M[i][i]
                col_add(i + 1, i, -q)
                changed = True
    diag = [M[i][i] for i in range(rank)]
    return diag, U, Uinv


@dataclass
class HomologyData:
    """Spanning tree, H1 rank/torsion and an explicit cycle basis.

    In torus mode the basis is normalized so that the intersection number
    <z_1, z_2> is +1; class coordinates are then positively oriented with
    respect to the surface orientation (positive faces anticlockwise).
    """

    dimer: object
    tree: set
    root: int
    h1_rank: int
    torsion: list
    basis_chains: list          # chains z_1..z_rank as {arrow: coeff}
    _parent: dict               # vertex -> (parent vertex, arrow, +1/-1)
    _depth: dict
    _free_rows: list            # rows of U giving classes of nontree arrows
    _nontree_index: dict
    _class_cache: dict = field(default_factory=dict)
    basis_intersection: int = None

    # -- chains -------------------------------------------------------------

    def base_chain(self, v, w):
        """Chain of the tree path from w to v (boundary = v - w)."""
        key = (v, w)
        if key in self._class_cache:
            return self._class_cache[key]
        chain = {}
        x, y = v, w
        while self._depth[x] > self._depth[y]:
            p, a, s = self._parent[x]
            chain[a] = chain.get(a, 0) + s
            x = p
        while self._depth[y] > self._depth[x]:
            p, a, s = self._parent[y]
            chain[a] = chain.get(a, 0) - s
            y = p
        while x != y:
            p, a, s = self._parent[x]
            chain[a] = chain.get(a, 0) + s
            x = p
            p, a, s = self._parent[y]
            chain[a] = chain.get(a, 0) - s
            y = p
        chain = {a: c for a, c in chain.items() if c}
        self._class_cache[key] = chain
        return chain

    def class_of(self, chain):
        """Class in Z^h1_rank of a closed integer 1-chain {arrow: coeff}."""
        out = [0] * self.h1_rank
        for a, c in chain.items():
            if c == 0:
                continue
            j = self._nontree_index.get(a)
            if j is None:
                continue
            for i, row in enumerate(self._free_rows):
                out[i] += c * row[j]
        return tuple(out)

    def arrow_class(self, a):
        """class_of of the single-arrow chain; the cocycle used for lifts."""
        return self.class_of({a: 1})

    def class_of_closed_path(self, arrows_with_dir):
        chain = {}
        for a, s in arrows_with_dir:
            chain[a] = chain.get(a, 0) + s
        return self.class_of(chain)

    def path_class(self, chain, head, tail):
        """Class of an open chain with boundary head - tail, closed up by the
        tree path from head back to tail."""
        closed = dict(chain)
        for a, c in self.base_chain(tail, head).items():
            closed[a] = closed.get(a, 0) + c
        return self.class_of(closed)

    def is_torus(self):
        return self.h1_rank == 2 and not self.torsion

    def require_torus(self):
        if not self.is_torus():
            raise DimerError(
                "not a torus: H1 rank %d, torsion %s" % (self.h1_rank, self.torsion))


def homology(d):
    """Compute HomologyData for a connected dimer."""
    if not d.is_connected():
        raise DimerError("dimer is not connected")
    verts = d.vertices()
    root = verts[0]
    parent = {root: None}
    depth = {root: 0}
    tree = set()
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for a in d.arrows():
                if d.head[a] == v and d.tail[a] not in parent:
                    w = d.tail[a]
                    parent[w] = (v, a, -1)  # walking v->w goes against a
                    depth[w] = depth[v] + 1
                    tree.add(a)
                    nxt.append(w)
                elif d.tail[a] == v and d.head[a] not in parent:
                    w = d.head[a]
                    parent[w] = (v, a, +1)
                    depth[w] = depth[v] + 1
                    tree.add(a)
                    nxt.append(w)
        frontier = nxt
    # sign convention: parent[x] = (p, a, s) with chain s*a having boundary
    # containing +x ... -p, i.e. walking from x toward the root adds s*a.
    fixed = {}
    for x, entry in parent.items():
        if entry is None:
            continue
        p, a, s = entry
        # want boundary(s*a) = x - p
        s2 = 1 if (d.head[a] == x and d.tail[a] == p) else -1
        fixed[x] = (p, a, s2)
    parent = {root: None, **fixed}

    nontree = [a for a in d.arrows() if a not in tree]
    idx = {a: j for j, a in enumerate(nontree)}
    n = len(nontree)

    h = HomologyData(d, tree, root, 0, [], [], parent, depth, [], idx)

    # face boundaries in the fundamental-cycle coordinates
    cols = []
    for fid in d.faces():
        face = d.face_arrows(fid)
        col = [0] * n
        for a in face:
            j = idx.get(a)
            if j is not None:
                col[j] += 1
        cols.append(col)
    mat = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    diag, U, Uinv = _smith_normal_form(mat, n)
    rank = len(diag)
    torsion = [x for x in diag if abs(x) != 1]
    free_idx = list(range(rank, n))
    h.h1_rank = n - rank
    h.torsion = torsion
    h._free_rows = [U[i] for i in free_idx]

    # basis chain for free coordinate i: sum_j Uinv[j][free_i] * cycle_j
    basis = []
    for fi in free_idx:
        chain = {}
        for j, a in enumerate(nontree):
            c = Uinv[j][fi]
            if not c:
                continue
            chain[a] = chain.get(a, 0) + c
            for b, cb in h.base_chain(d.head[a], d.tail[a]).items():
                chain[b] = chain.get(b, 0) - c * cb
        basis.append({a: c for a, c in chain.items() if c})
    h.basis_chains = basis
    if h.h1_rank == 2 and not h.torsion:
        s = intersection_number(d, basis[0], basis[1])
        if s < 0:
            h.basis_chains = [basis[1], basis[0]]
            h._free_rows = [h._free_rows[1], h._free_rows[0]]
            s = -s
        h.basis_intersection = s
    return h


def pairing(chain, arrow_set):
    """<chain, P> = sum of chain coefficients over arrows of P."""
    return sum(c for a, c in chain.items() if a in arrow_set)


def intersection_number(d, alpha, beta, rotations=None):
    """Exact algebraic intersection number of two closed integer 1-chains.

    Both chains are perturbed to transverse curve systems: strands run along
    the arrows (beta strands uniformly to the left of alpha strands on shared
    edges) and all crossings are resolved inside vertex disks using the
    anticlockwise dart order.
    """
    if rotations is None:
        rotations = d.vertex_rotations()

    # strand lists per chain: (arrow, direction +1/-1, strand index, leftness)
    def strands(chain, left_base):
        out = []
        for a, c in sorted(chain.items()):
            n = abs(c)
            s = 1 if c > 0 else -1
            for i in range(n):
                out.append((a, s, left_base + i))
            left_base += n
        return out

    alpha_strands = strands(alpha, 0)
    beta_strands = strands(beta, 10 ** 6)  # all beta strands more-left

    # ends: per vertex, list of (circle position key, chain tag, io)
    # position key: (dart position in rotation, tie-break by leftness with
    # the sign depending on head/tail end)
    pos_index = {}
    for v, order in rotations.items():
        for i, dart in enumerate(order):
            pos_index[dart] = (v, i)

    per_vertex = {}

    def add_end(dart, leftness, tag, io):
        v, i = pos_index[dart]
        sign = -1 if dart[0] == 'h' else 1
        key = (i, sign * leftness)
        per_vertex.setdefault(v, []).append((key, tag, io))

    for tag, slist in (("a", alpha_strands), ("b", beta_strands)):
        for a, s, left in slist:
            if s > 0:   # runs tail -> head
                add_end(('t', a), left, tag, 'out')
                add_end(('h', a), left, tag, 'in')
            else:       # runs head -> tail
                add_end(('h', a), left, tag, 'out')
                add_end(('t', a), left, tag, 'in')

    total = 0
    for v, ends in per_vertex.items():
        ends.sort()
        m = len(ends)
        ranked = [(i, tag, io) for i, (key, tag, io) in enumerate(ends)]
        passages = {"a": [], "b": []}
        for tag in ("a", "b"):
            ins = [i for i, t, io in ranked if t == tag and io == 'in']
            outs = [i for i, t, io in ranked if t == tag and io == 'out']
            passages[tag] = list(zip(ins, outs))
        for ia, oa in passages["a"]:
            for ib, ob in passages["b"]:
                # does the ACW arc from ia to oa contain ib / ob?
                def between(x):
                    if ia < oa:
                        return ia < x < oa
                    return x > ia or x < oa
                bi, bo = between(ib), between(ob)
                if bi and not bo:
                    total += 1
                elif bo and not bi:
                    total -= 1
    return total
