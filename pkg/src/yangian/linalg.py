"""Exact rational sparse vectors and row reduction.

Vectors are dicts mapping hashable coordinate labels to nonzero
Fractions.  Echelon keeps a fully reduced row form so that expressing
a vector in the span is a single read-off pass.
"""

from fractions import Fraction


def vec_add(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def vec_sub(a, b):
    return vec_add(a, {k: -c for k, c in b.items()})


def vec_scale(a, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def vec_axpy(a, c, b):
    """a + c * b without building an intermediate."""
    if not c:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + c * v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def vec_dot(a, b):
    if len(b) < len(a):
        a, b = b, a
    return sum((c * b[k] for k, c in a.items() if k in b), Fraction(0))


class Echelon:
    """A reduced row-echelon family of sparse vectors.

    Rows are normalized to pivot coefficient 1 and reduced against each
    other, so membership coordinates are read off the pivots directly.
    """

    def __init__(self):
        self.rows = {}          # pivot -> row vector
        self.order = []         # pivots in insertion order

    def __len__(self):
        return len(self.order)

    def reduce(self, vec):
        """Remainder of vec modulo the current span."""
        vec = dict(vec)
        # rows are zero at each other's pivots, so one pass suffices
        for p in [p for p in vec if p in self.rows]:
            c = vec.get(p)
            if c:
                vec = vec_axpy(vec, -c, self.rows[p])
        return vec

    def insert(self, vec):
        """Add vec to the span; returns the new pivot or None if dependent."""
        rem = self.reduce(vec)
        if not rem:
            return None
        pivot = min(rem)
        rem = vec_scale(rem, 1 / rem[pivot])
        for p, row in self.rows.items():
            if pivot in row:
                self.rows[p] = vec_axpy(row, -row[pivot], rem)
        self.rows[pivot] = rem
        self.order.append(pivot)
        return pivot

    def coords(self, vec):
        """Coordinates of vec over the rows (insertion order); None if outside."""
        out = [Fraction(0)] * len(self.order)
        rem = dict(vec)
        for idx, p in enumerate(self.order):
            c = rem.get(p)
            if c:
                out[idx] = c
                rem = vec_axpy(rem, -c, self.rows[p])
        if rem:
            return None
        return out


def nullspace(rows, ncols):
    """Kernel basis of the matrix with the given dense rows.

    rows is a list of length-ncols lists of Fractions; returns a list
    of dense kernel vectors.
    """
    mat = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -mat[i][f]
        basis.append(v)
    return basis


def det(mat):
    """Exact determinant by fraction-free row reduction."""
    n = len(mat)
    m = [list(map(Fraction, row)) for row in mat]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        sel = None
        for i in range(c, n):
            if m[i][c]:
                sel = i
                break
        if sel is None:
            return Fraction(0)
        if sel != c:
            m[c], m[sel] = m[sel], m[c]
            sign = -sign
        out *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out * sign
