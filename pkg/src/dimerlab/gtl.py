"""The angle quiver of a dimer and its A-infinity products.

Angle arrows connect arrow midpoints inside each face, running clockwise
around the face polygon: in a positive face the angle at arrow a points to
the arrow walked before a, in a negative face to the arrow walked after a.
The ordinary algebra is the path algebra of the angle quiver modulo
products of two consecutive angles of one face; higher products repeatedly
strip full face cycles of angles off the input sequence.
"""

from dataclasses import dataclass
from fractions import Fraction

from .dimer import DimerError


@dataclass(frozen=True)
class Angle:
    """One face corner: from midpoint of src arrow to midpoint of dst arrow."""
    face: int
    src: int
    dst: int

    def __str__(self):
        return "<%d->%d in %s%d>" % (
            self.src, self.dst, "+" if self.face > 0 else "-", abs(self.face))


class AngleQuiver:
    def __init__(self, dimer):
        self.dimer = dimer
        self.angles = []
        self.by_src = {}
        self.next_in_face = {}
        cycles = {}
        for fid in dimer.faces():
            face = dimer.face_arrows(fid)
            sigma = dimer.face_sigma(fid)
            if fid > 0:
                step = {v: k for k, v in sigma.items() if k in face}  # sigma^-1
                nxt = {a: step[a] for a in face}
            else:
                nxt = {a: sigma[a] for a in face}
            for a in face:
                ang = Angle(fid, a, nxt[a])
                self.angles.append(ang)
                self.by_src.setdefault((fid, a), ang)
            cycles[fid] = nxt
        self._cycles = cycles
        if len(self.angles) != 2 * dimer.arrow_count:
            raise DimerError("angle count %d != 2E" % len(self.angles))

    def angle(self, fid, src):
        return self.by_src[(fid, src)]

    def face_cycle_words(self, fid):
        """All rotations of the face's angle cycle in product order."""
        nxt = self._cycles[fid]
        arrows = list(self.dimer.face_arrows(fid))
        words = set()
        for start in arrows:
            seq = [start]
            x = nxt[start]
            while x != start:
                seq.append(x)
                x = nxt[x]
            # visiting order seq; product order is reversed
            word = tuple(self.angle(fid, a) for a in reversed(seq))
            words.add(word)
        return words

    def all_face_cycle_words(self):
        out = set()
        for fid in self.dimer.faces():
            out |= self.face_cycle_words(fid)
        return out

    def relations(self):
        """Pairs (alpha, beta) with alpha.beta = 0: consecutive in one face."""
        rels = []
        for fid in self.dimer.faces():
            for a in self.dimer.face_arrows(fid):
                beta = self.angle(fid, a)
                alpha = self.angle(fid, beta.dst)
                rels.append((alpha, beta))
        return rels


@dataclass(frozen=True)
class AnglePath:
    """A reduced path in the angle quiver: word in product order.

    The empty word is the idempotent at arrow midpoint `at`.  Paths with two
    consecutive same-face angles are zero and may not be constructed.
    """
    word: tuple
    at: int = None
    coeff: Fraction = Fraction(1)

    @property
    def head(self):
        return self.word[0].dst if self.word else self.at

    @property
    def tail(self):
        return self.word[-1].src if self.word else self.at

    def is_idempotent(self):
        return not self.word and self.coeff != 0

    def is_zero(self):
        return self.coeff == 0

    def degree(self, grading):
        """Z-degree under a matching grading; idempotents have degree 0."""
        return sum(grading(ang) for ang in self.word)

    def scaled(self, c):
        c = Fraction(c)
        if c == 0:
            return ZERO_PATH
        return AnglePath(self.word, self.at, self.coeff * c)

    def __str__(self):
        if self.is_zero():
            return "0"
        if not self.word:
            return "%s * e_%d" % (self.coeff, self.at)
        return "%s * %s" % (self.coeff, "".join(str(a) for a in self.word))


ZERO_PATH = AnglePath((), None, Fraction(0))


def idempotent(arrow_mid):
    return AnglePath((), arrow_mid)


def angle_path(angles, coeff=Fraction(1)):
    """Build an AnglePath from a composable angle list in product order."""
    word = tuple(angles)
    for x, y in zip(word, word[1:]):
        if x.src != y.dst:
            raise DimerError("non-composable angle pair %s, %s" % (x, y))
    for x, y in zip(word, word[1:]):
        if x.face == y.face:
            return ZERO_PATH
    return AnglePath(word, word[-1].src if word else None, Fraction(coeff))


def mu2(x, y):
    """Ordinary product x.y in the quotient algebra (y acts first)."""
    if x.is_zero() or y.is_zero():
        return ZERO_PATH
    if x.tail != y.head:
        return ZERO_PATH
    if not x.word:
        return y.scaled(x.coeff)
    if not y.word:
        return x.scaled(y.coeff)
    if x.word[-1].face == y.word[0].face:
        return ZERO_PATH
    return AnglePath(x.word + y.word, y.at, x.coeff * y.coeff)


def matching_grading(matching):
    """Angle degree: -1 if the angle arrives in a matched arrow, else +1."""
    def grading(ang):
        return -1 if ang.dst in matching else 1
    return grading


def gtl_mu(aq, seq):
    """Combinatorial higher product on a sequence of angle paths.

    For two inputs this is the ordinary product.  For more, the reduction
    step strips a full face cycle distributed as a trailing angle of one
    input, bare single-angle inputs, and a leading angle of a later input;
    if no reduction terminates in a binary product the result is zero.
    Each strip contributes the sign (-1)^(|rho_i| + |rho_{i+1}|).
    """
    seq = list(seq)
    if any(x.is_zero() for x in seq):
        return ZERO_PATH
    for x, y in zip(seq, seq[1:]):
        if x.tail != y.head:
            raise DimerError("non-composable inputs %s | %s" % (x, y))
    if len(seq) == 0:
        raise DimerError("empty input sequence")
    if len(seq) == 1:
        return ZERO_PATH  # mu_1 = 0 in the minimal setup
    if len(seq) == 2:
        return mu2(seq[0], seq[1])
    if any(x.is_idempotent() for x in seq):
        return ZERO_PATH
    coeff = Fraction(1)
    for x in seq:
        coeff *= x.coeff
    # entries: ('p', [angles...]) or ('e', midpoint) once a word emptied
    entries = [('p', list(x.word)) for x in seq]
    cycles = aq.all_face_cycle_words()
    sign = 1
    while True:
        k = len(entries)
        site = None
        for i in range(k - 1):
            if entries[i][0] != 'p':
                continue
            beta1 = entries[i][1][-1]
            for j in range(i + 1, k):
                middles = entries[i + 1:j]
                if any(kind != 'p' or len(w) != 1 for kind, w in middles):
                    break
                if entries[j][0] != 'p':
                    break
                cand = tuple([beta1] + [w[0] for _, w in middles]
                             + [entries[j][1][0]])
                if cand in cycles:
                    site = (i, j)
                    break
            if site:
                break
        if site is None:
            return ZERO_PATH
        i, j = site
        beta1 = entries[i][1][-1]
        beta_l = entries[j][1][0]
        rho_i = entries[i][1][:-1]
        rho_j = entries[j][1][1:]
        sign *= (-1) ** (len(rho_i) + len(rho_j))
        left = ('p', rho_i) if rho_i else ('e', beta1.dst)
        right = ('p', rho_j) if rho_j else ('e', beta_l.src)
        entries = entries[:i] + [left, right] + entries[j + 1:]
        if len(entries) == 2:
            x, y = (_entry_path(e) for e in entries)
            return mu2(x, y).scaled(sign * coeff)
        if any(kind == 'e' for kind, _ in entries):
            return ZERO_PATH  # idempotent entry in a higher product


def _entry_path(entry):
    kind, payload = entry
    if kind == 'e':
        return idempotent(payload)
    return angle_path(payload)
