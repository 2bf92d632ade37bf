"""Canonical elements of the (weak) Jacobi algebra of a dimer.

A weak path is determined, as an element of the weak Jacobi algebra, by its
endpoints, the homology class of its tree closure and its degree under one
reference perfect matching.  PathElement stores exactly that canonical form,
so equality of elements is equality of tuples.
"""

from dataclasses import dataclass
from fractions import Fraction

from .dimer import DimerError
from .homology import pairing


@dataclass(frozen=True)
class PathElement:
    head: int
    tail: int
    hclass: tuple
    refdeg: int
    coeff: Fraction = Fraction(1)

    def is_zero(self):
        return self.coeff == 0

    def __bool__(self):
        return self.coeff != 0

    def scaled(self, c):
        c = Fraction(c)
        if c == 0:
            return ZERO
        return PathElement(self.head, self.tail, self.hclass, self.refdeg,
                           self.coeff * c)

    def key(self):
        """Canonical form without the coefficient."""
        return (self.head, self.tail, self.hclass, self.refdeg)

    def __str__(self):
        if self.is_zero():
            return "0"
        return "%s * [h=%d,t=%d,l=%s,k=%d]" % (
            self.coeff, self.head, self.tail, list(self.hclass), self.refdeg)


ZERO = PathElement(0, 0, (), 0, Fraction(0))


def multiply(e1, e2):
    """Concatenation e1 . e2 (e2 acts first); zero unless tail(e1)=head(e2)."""
    if e1.is_zero() or e2.is_zero():
        return ZERO
    if e1.tail != e2.head:
        return ZERO
    return PathElement(e1.head, e2.tail,
                       tuple(x + y for x, y in zip(e1.hclass, e2.hclass)),
                       e1.refdeg + e2.refdeg, e1.coeff * e2.coeff)


def add_into(acc, e):
    """Accumulate a PathElement into a {key: coeff} linear combination."""
    if e.is_zero():
        return
    k = e.key()
    acc[k] = acc.get(k, Fraction(0)) + e.coeff
    if acc[k] == 0:
        del acc[k]


class JacobiContext:
    """Dimer + homology + reference matching, with the derived caches.

    The reference matching P0 is the lexicographically smallest perfect
    matching; by the canonical-form lemma the choice does not affect
    equality testing.
    """

    def __init__(self, dimer, hom, matchings=None, ref_index=0):
        from .matching import enumerate_matchings
        self.dimer = dimer
        self.hom = hom
        self.matchings = (enumerate_matchings(dimer)
                          if matchings is None else matchings)
        if not self.matchings:
            raise DimerError("dimer admits no perfect matching")
        if not 0 <= ref_index < len(self.matchings):
            raise DimerError("reference matching index out of range")
        self.p0 = self.matchings[ref_index]
        self.rank = hom.h1_rank
        self._zero_class = tuple([0] * self.rank)
        # degree shift of a base chain under each matching, cached on demand
        self._deg_cache = {}

    # -- constructors -----------------------------------------------------

    def identity(self, v):
        return PathElement(v, v, self._zero_class, 0)

    def ell(self, v):
        """The central element's component at v: one face cycle based at v."""
        return PathElement(v, v, self._zero_class, 1)

    def arrow(self, a):
        return self.word([(a, 1)])

    def arrow_inverse(self, a):
        return self.word([(a, -1)])

    def word(self, word):
        """Canonical form of a weak path given in product order.

        word is a list of (arrow-id, +1/-1); the right-most factor acts
        first, and consecutive factors must compose: t(w_i) = h(w_{i+1})
        with t/h swapped for inverted arrows.
        """
        d = self.dimer
        if not word:
            raise DimerError("empty word has no endpoints; use identity(v)")
        chain = {}
        refdeg = 0
        prev_tail = None
        for a, e in word:
            if e not in (1, -1):
                raise DimerError("exponent must be +1 or -1")
            h, t = (d.head[a], d.tail[a]) if e == 1 else (d.tail[a], d.head[a])
            if prev_tail is not None and prev_tail != h:
                raise DimerError(
                    "non-composable word at arrow %d^%d: expected head %d, got %d"
                    % (a, e, prev_tail, h))
            prev_tail = t
            chain[a] = chain.get(a, 0) + e
            if a in self.p0:
                refdeg += e
        head = d.head[word[0][0]] if word[0][1] == 1 else d.tail[word[0][0]]
        tail = prev_tail
        hclass = self.hom.path_class(chain, head, tail)
        return PathElement(head, tail, hclass, refdeg)

    # -- degrees -----------------------------------------------------------

    def _base_deg(self, matching, v, w):
        key = (matching, v, w)
        if key not in self._deg_cache:
            self._deg_cache[key] = pairing(self.hom.base_chain(v, w), matching)
        return self._deg_cache[key]

    def z_chain_pairing(self, matching, hclass):
        return sum(c * pairing(z, matching)
                   for c, z in zip(hclass, self.hom.basis_chains))

    def deg(self, e, matching):
        """Degree of the element under an arbitrary perfect matching.

        deg_P(e) = refdeg + <P - P0, z(hclass) - c> with c the tree chain
        closing the path from tail to head.
        """
        if e.is_zero():
            raise DimerError("zero element has no degree")
        delta = (self.z_chain_pairing(matching, e.hclass)
                 - self.z_chain_pairing(self.p0, e.hclass))
        base = (self._base_deg(matching, e.tail, e.head)
                - self._base_deg(self.p0, e.tail, e.head))
        return e.refdeg + delta - base

    def in_jacobi(self, e):
        """Broomhead's criterion: nonnegative degree under every matching."""
        if e.is_zero():
            return True
        return all(self.deg(e, p) >= 0 for p in self.matchings)

    # -- face cycles ---------------------------------------------------------

    def face_cycle_element(self, fid, start_arrow):
        """The full face cycle walked starting at start_arrow, as an element."""
        d = self.dimer
        face = d.face_arrows(fid)
        if start_arrow not in face:
            raise DimerError("arrow %d not in face %d" % (start_arrow, fid))
        sigma = d.face_sigma(fid)
        seq = [start_arrow]
        x = sigma[start_arrow]
        while x != start_arrow:
            seq.append(x)
            x = sigma[x]
        # walking order seq; product order is reversed
        return self.word([(a, 1) for a in reversed(seq)])

    def r_plus(self, a):
        """r_a^+: the positive face cycle with the leading arrow a removed."""
        pos, _ = self.dimer.faces_of_arrow(a)
        return self.subpath_after(pos, a, self.face_len(pos) - 1)

    def r_minus(self, a):
        neg = self.dimer.faces_of_arrow(a)[1]
        return self.subpath_after(neg, a, self.face_len(neg) - 1)

    def face_len(self, fid):
        return len(self.dimer.face_arrows(fid))

    def subpath_after(self, fid, a, nsteps):
        """Walk nsteps arrows of face fid starting right after arrow a."""
        sigma = self.dimer.face_sigma(fid)
        seq = []
        x = sigma[a]
        for _ in range(nsteps):
            seq.append(x)
            x = sigma[x]
        if not seq:
            return self.identity(self.dimer.head[a])
        return self.word([(b, 1) for b in reversed(seq)])

    def inverse(self, e):
        if e.is_zero():
            raise DimerError("zero element has no inverse")
        return PathElement(e.tail, e.head,
                           tuple(-x for x in e.hclass), -e.refdeg,
                           Fraction(1) / e.coeff)

    def is_unit(self, e):
        """Units among monomial elements: identity-like loops."""
        return (not e.is_zero() and e.head == e.tail
                and e.hclass == self._zero_class and e.refdeg == 0)
