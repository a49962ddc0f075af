"""Exact arithmetic in the universal enveloping algebra of gl(N).

Elements are linear combinations of ordered monomials in the matrix
units E[i,j] (1 <= i,j <= N) with exact rational coefficients.  Words
are rewritten into the ordered basis through the commutation rule

    E[i,j] E[k,l] = E[k,l] E[i,j] + d_jk E[i,l] - d_li E[k,j]

applied to adjacent factors; the result is independent of the rewrite
sequence.  The default generator order is lexicographic in
(row, column).  A different total order gives a different ordered
basis of the same algebra; the centralizer projection uses one that
pushes the last row and column to the ends of each monomial.

All values are immutable after construction and every operation is a
pure function, so concurrent use needs no synchronization.  The memo
tables inside Ordering only ever receive idempotent writes.
"""

import math
from fractions import Fraction

from . import scalars


def bracket(g, h):
    """[E_g, E_h] as a list of (sign, generator) pairs."""
    i, j = g
    k, l = h
    out = []
    if j == k:
        out.append((1, (i, l)))
    if l == i:
        out.append((-1, (k, j)))
    return out


class Ordering:
    """A total order on the generators together with rewrite caches.

    key maps a generator (i, j) to a sort key.  Any fixed total order
    yields an ordered basis; the rewriting below sorts words by
    adjacent transpositions, inserting the bracket correction terms.
    Caches are keyed on (monomial, generator) and (monomial, monomial)
    pairs and hold integer coefficient tables.
    """

    def __init__(self, key):
        self.key = key
        self._gen_cache = {}
        self._pair_cache = {}

    def times_gen(self, mono, g):
        """Normal form of mono * E_g as a dict word -> int coefficient."""
        hit = self._gen_cache.get((mono, g))
        if hit is not None:
            return hit
        key = self.key
        if not mono or key(mono[-1]) <= key(g):
            out = {mono + (g,): 1}
        else:
            head, x = mono[:-1], mono[-1]
            acc = {}
            # x g = g x + [x, g], so mono g = (head g) x + head [x, g]
            for w, c in self.times_gen(head, g).items():
                for w2, c2 in self.times_gen(w, x).items():
                    acc[w2] = acc.get(w2, 0) + c * c2
            for sign, gb in bracket(x, g):
                for w2, c2 in self.times_gen(head, gb).items():
                    acc[w2] = acc.get(w2, 0) + sign * c2
            out = {w: c for w, c in acc.items() if c}
        self._gen_cache[(mono, g)] = out
        return out

    def mono_mul(self, a, b):
        """Normal form of the concatenation of two ordered monomials."""
        if not a:
            return {b: 1}
        if not b:
            return {a: 1}
        if self.key(a[-1]) <= self.key(b[0]):
            return {a + b: 1}
        hit = self._pair_cache.get((a, b))
        if hit is not None:
            return hit
        out = self.sort_word(a + b, skip=len(a))
        self._pair_cache[(a, b)] = out
        return out

    def sort_word(self, word, skip=0):
        """Normal form of an arbitrary word of generators."""
        cur = {tuple(word[:skip]): 1}
        for g in word[skip:]:
            nxt = {}
            for w, c in cur.items():
                for w2, c2 in self.times_gen(w, g).items():
                    k = nxt.get(w2, 0) + c * c2
                    if k:
                        nxt[w2] = k
                    elif w2 in nxt:
                        del nxt[w2]
            cur = nxt
        return cur


LEX = Ordering(lambda g: g)


def _validate_word(word, N):
    for g in word:
        i, j = g
        if not (1 <= i <= N and 1 <= j <= N):
            raise ValueError("generator index %r out of range for rank %d" % (g, N))


class UeaElement:
    """A gl(N) enveloping-algebra element in the ordered basis.

    terms maps ordered monomials (tuples of (i, j) generators) to
    nonzero Fraction coefficients; the empty monomial is the unit.
    Equality is equality of the tables.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N, terms):
        self.N = N
        self.terms = terms

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, N):
        return cls(N, {})

    @classmethod
    def one(cls, N):
        return cls(N, {(): Fraction(1)})

    @classmethod
    def scalar(cls, N, c):
        c = Fraction(c)
        return cls(N, {(): c} if c else {})

    @classmethod
    def gen(cls, N, i, j):
        _validate_word([(i, j)], N)
        return cls(N, {((i, j),): Fraction(1)})

    @classmethod
    def from_terms(cls, N, items):
        """Sum of coeff * word over (coeff, word) pairs; words need not be ordered."""
        acc = {}
        for c, word in items:
            word = tuple(word)
            _validate_word(word, N)
            for w, k in LEX.sort_word(word).items():
                v = acc.get(w, Fraction(0)) + Fraction(c) * k
                if v:
                    acc[w] = v
                elif w in acc:
                    del acc[w]
        return cls(N, acc)

    # -- helpers -----------------------------------------------------

    def _require_same_rank(self, other):
        if self.N != other.N:
            raise ValueError("rank mismatch: %d vs %d" % (self.N, other.N))

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Filtration degree; -1 for the zero element."""
        return max((len(m) for m in self.terms), default=-1)

    def scalar_part(self):
        return self.terms.get((), Fraction(0))

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UeaElement):
            other = UeaElement.scalar(self.N, other)
        self._require_same_rank(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            v = acc.get(w, Fraction(0)) + c
            if v:
                acc[w] = v
            elif w in acc:
                del acc[w]
        return UeaElement(self.N, acc)

    __radd__ = __add__

    def __neg__(self):
        return UeaElement(self.N, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UeaElement):
            other = UeaElement.scalar(self.N, other)
        return self + (-other)

    def __rsub__(self, other):
        return UeaElement.scalar(self.N, other) - self

    def __mul__(self, other):
        if not isinstance(other, UeaElement):
            c = Fraction(other)
            if not c:
                return UeaElement.zero(self.N)
            return UeaElement(self.N, {w: k * c for w, k in self.terms.items()})
        self._require_same_rank(other)
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, k in LEX.mono_mul(w1, w2).items():
                    v = acc.get(w, Fraction(0)) + c * k
                    if v:
                        acc[w] = v
                    elif w in acc:
                        del acc[w]
        return UeaElement(self.N, acc)

    def __rmul__(self, other):
        # only scalars reach here; scalars are central
        return self * other

    def __eq__(self, other):
        if not isinstance(other, UeaElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    # -- structure maps ----------------------------------------------

    def star(self):
        """The anti-involution determined by E[i,j] -> E[j,i]."""
        acc = {}
        for w, c in self.terms.items():
            flipped = tuple((j, i) for (i, j) in reversed(w))
            for w2, k in LEX.sort_word(flipped).items():
                v = acc.get(w2, Fraction(0)) + c * k
                if v:
                    acc[w2] = v
                elif w2 in acc:
                    del acc[w2]
        return UeaElement(self.N, acc)

    def reordered(self, ordering):
        """Coefficient table of this element in the basis ordered by `ordering`.

        Returns a raw dict word -> Fraction; the words are sorted under
        the supplied order, not the default one.
        """
        acc = {}
        for w, c in self.terms.items():
            for w2, k in ordering.sort_word(w).items():
                v = acc.get(w2, Fraction(0)) + c * k
                if v:
                    acc[w2] = v
                elif w2 in acc:
                    del acc[w2]
        return acc

    # -- output ------------------------------------------------------

    def to_text(self):
        """Canonical text form: monomials E[i,j]*E[k,l], rationals p/q."""
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[w]
            mono = "*".join("E[%d,%d]" % g for g in w)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (c, mono))
        text = bits[0]
        for b in bits[1:]:
            text += " - " + b[1:] if b.startswith("-") else " + " + b
        return text

    def __repr__(self):
        return "UeaElement(%d, %s)" % (self.N, self.to_text())


def normal_order(word, N):
    """PBW normal form of a word of generators, as a UeaElement."""
    word = tuple(tuple(g) for g in word)
    _validate_word(word, N)
    return UeaElement(N, {w: Fraction(c) for w, c in LEX.sort_word(word).items()})


def multiply(a, b):
    return a * b


def commutator(a, b):
    return a * b - b * a


def star(a):
    return a.star()


class UPoly:
    """Polynomial in a central variable u with UeaElement coefficients.

    Coefficients stand to the left of the powers of u, which fixes the
    meaning of substituting a noncommuting value for u (eval_left).
    """

    __slots__ = ("N", "coeffs")

    def __init__(self, N, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.N = N
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, N):
        return cls(N, ())

    @classmethod
    def one(cls, N):
        return cls(N, (UeaElement.one(N),))

    @classmethod
    def variable(cls, N):
        return cls(N, (UeaElement.zero(N), UeaElement.one(N)))

    @classmethod
    def constant(cls, elem):
        return cls(elem.N, (elem,))

    @classmethod
    def from_scalar_poly(cls, N, p):
        return cls(N, tuple(UeaElement.scalar(N, c) for c in p))

    def _require_same_rank(self, other):
        if self.N != other.N:
            raise ValueError("rank mismatch: %d vs %d" % (self.N, other.N))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return UeaElement.zero(self.N)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, UeaElement):
            return UPoly.constant(other)
        return UPoly.constant(UeaElement.scalar(self.N, other))

    def __add__(self, other):
        other = self._coerce(other)
        self._require_same_rank(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.N, [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.N, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            other = UPoly.constant(other)
        if not isinstance(other, UPoly):
            c = Fraction(other)
            return UPoly(self.N, [x * c for x in self.coeffs])
        self._require_same_rank(other)
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.N)
        out = [UeaElement.zero(self.N)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return UPoly(self.N, out)

    def __rmul__(self, other):
        if isinstance(other, UeaElement):
            return UPoly.constant(other) * self
        return self * other

    def scale_poly(self, p):
        """Multiply by a central scalar polynomial (list of Fractions)."""
        return self * UPoly.from_scalar_poly(self.N, p)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def shift(self, a):
        """Substitute u -> u + a for a central scalar a."""
        a = Fraction(a)
        out = [UeaElement.zero(self.N) for _ in self.coeffs]
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            pw = Fraction(1)
            for j in range(k, -1, -1):
                out[j] = out[j] + c * (math.comb(k, k - j) * pw)
                pw *= a
        return UPoly(self.N, out)

    def eval_scalar(self, x):
        """Value at a central rational sample."""
        x = Fraction(x)
        acc = UeaElement.zero(self.N)
        pw = Fraction(1)
        for c in self.coeffs:
            acc = acc + c * pw
            pw *= x
        return acc

    def eval_left(self, x):
        """Sum of coeff_k * x^k with the coefficient on the left of x^k."""
        if not isinstance(x, UeaElement):
            return self.eval_scalar(x)
        self._require_same_rank(x)
        acc = UeaElement.zero(self.N)
        pw = UeaElement.one(self.N)
        for k, c in enumerate(self.coeffs):
            if k:
                pw = pw * x
            acc = acc + c * pw
        return acc

    def scalar_coeffs(self):
        """The coefficient list as Fractions; None if any coefficient is not scalar."""
        out = []
        for c in self.coeffs:
            if any(w for w in c.terms):
                return None
            out.append(c.scalar_part())
        return scalars.trim(out)

    def to_text_list(self):
        return [c.to_text() for c in self.coeffs]

    def __repr__(self):
        return "UPoly(%d, %s)" % (self.N, self.to_text_list())


def eval_left(p, x):
    """Evaluate a UPoly at x, coefficients kept on the left."""
    return p.eval_left(x)
