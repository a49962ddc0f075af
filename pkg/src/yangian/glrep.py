"""Concrete irreducible gl(N)-modules for partition highest weights.

L(lam) is realized inside the tensor power (C^N)^(|lam|): the highest
vector is the tensor product over the columns of lam of antisymmetrized
e_1 ^ ... ^ e_h, and the module is the closure of that vector under the
lowering generators E[i+1,i], with exact Gaussian elimination keeping a
reduced echelon basis.  Every basis vector has a definite weight; the
action of every generator is cached as a sparse matrix over the basis.

The contravariant form is the restriction of the standard form of the
ambient tensor space (monomial tensors orthonormal) rescaled so the
highest vector has norm one; it satisfies <Xu, v> = <u, star(X) v>.
"""

import itertools
import os
from fractions import Fraction

from . import linalg
from .rmatrix import perm_sign

DEFAULT_MAX_AMBIENT = 5_000_000
MAX_AMBIENT_ENV = "YANGIAN_MAX_AMBIENT"


class SizeGuardError(ValueError):
    """The requested module is too large for exact desk-scale work."""


def validate_partition(lam):
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError("partition entries must be nonnegative")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition entries must be weakly decreasing")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def weyl_dimension(lam, N):
    """Dimension of L(lam) by the product-over-pairs formula."""
    lam = list(lam) + [0] * (N - len(lam))
    num = den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def branching_admissible(lam, mu, n):
    """mu sits inside lam with every skew column at most n cells tall."""
    lam = validate_partition(lam)
    mu = validate_partition(mu)
    if len(mu) > len(lam):
        return False
    padded = mu + (0,) * (len(lam) - len(mu))
    if any(m > l for m, l in zip(padded, lam)):
        return False
    for c in range(1, (lam[0] if lam else 0) + 1):
        height = sum(1 for r in range(len(lam)) if padded[r] < c <= lam[r])
        if height > n:
            return False
    return True


def restriction_multiplicity(lam, mu, N, m):
    """Number of interlacing partition chains from lam at rank N to mu at rank m.

    Counts the multiplicity of the rank-m module L(mu) inside L(lam)
    restricted step by step; used as an independent oracle for the
    dimension of the highest-vector subspace.
    """
    lam = validate_partition(lam)
    mu = validate_partition(mu)
    if len(mu) > m or len(lam) > N:
        return 0
    level = {tuple(list(lam) + [0] * (N - len(lam))): 1}
    for rank in range(N - 1, m - 1, -1):
        nxt = {}
        for top, count in level.items():
            for cand in _interlacing(top, rank):
                nxt[cand] = nxt.get(cand, 0) + count
        level = nxt
    target = tuple(list(mu) + [0] * (m - len(mu)))
    return level.get(target, 0)


def _interlacing(top, rank):
    ranges = [range(top[i + 1], top[i] + 1) for i in range(rank)]
    for cand in itertools.product(*ranges):
        if all(cand[i] >= cand[i + 1] for i in range(rank - 1)):
            yield cand


def _wedge(height):
    """Antisymmetrized e_1 ^ ... ^ e_height as a sparse tensor."""
    out = {}
    for perm in itertools.permutations(range(1, height + 1)):
        out[perm] = Fraction(perm_sign(tuple(p - 1 for p in perm)))
    return out


def _tensor(a, b):
    if not a or not b:
        return {}
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            out[ka + kb] = va * vb
    return out


def max_ambient_bound(override=None):
    if override is not None:
        return int(override)
    env = os.environ.get(MAX_AMBIENT_ENV)
    return int(env) if env else DEFAULT_MAX_AMBIENT


class GlModule:
    """The irreducible gl(N)-module L(lam), constructed explicitly."""

    def __init__(self, lam, N, max_ambient=None):
        lam = validate_partition(lam)
        if len(lam) > N:
            raise ValueError("partition has more than N parts")
        self.N = N
        self.lam = lam
        self.size = sum(lam)
        bound = max_ambient_bound(max_ambient)
        if N ** self.size > bound:
            raise SizeGuardError(
                "ambient dimension %d^%d exceeds the size guard %d"
                % (N, self.size, bound))
        self._build()

    # -- construction --------------------------------------------------

    def _highest_ambient(self):
        cols = []
        for c in range(1, (self.lam[0] if self.lam else 0) + 1):
            h = sum(1 for x in self.lam if x >= c)
            cols.append(_wedge(h))
        vec = {(): Fraction(1)}
        for w in cols:
            vec = _tensor(vec, w)
        return vec

    def _gen_ambient(self, i, j, vec):
        """E[i,j] acting on an ambient sparse tensor (derivation action)."""
        out = {}
        for idx, c in vec.items():
            for t, x in enumerate(idx):
                if x == j:
                    key = idx[:t] + (i,) + idx[t + 1:]
                    v = out.get(key, 0) + c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return out

    def _build(self):
        xi = self._highest_ambient()
        ech = linalg.Echelon()
        ech.insert(xi)
        frontier = [dict(ech.rows[ech.order[0]])]
        lowerings = [(i + 1, i) for i in range(1, self.N)]
        while frontier:
            nxt = []
            for vec in frontier:
                for (i, j) in lowerings:
                    img = self._gen_ambient(i, j, vec)
                    if not img:
                        continue
                    pivot = ech.insert(img)
                    if pivot is not None:
                        nxt.append(dict(ech.rows[pivot]))
            frontier = nxt
        self.dim = len(ech)
        expected = weyl_dimension(self.lam, self.N)
        if self.dim != expected:
            raise AssertionError(
                "closure dimension %d does not match the dimension formula %d"
                % (self.dim, expected))
        self._ech = ech
        self._basis = [ech.rows[p] for p in ech.order]
        self.weights = [self._ambient_weight(next(iter(b))) for b in self._basis]
        self.xi = self._coords(xi)
        self._xi_norm = linalg.vec_dot(xi, xi)
        self._action = {}
        self._gram = {}

    def _ambient_weight(self, idx):
        w = [0] * self.N
        for x in idx:
            w[x - 1] += 1
        return tuple(w)

    def _coords(self, ambient_vec):
        coords = self._ech.coords(ambient_vec)
        if coords is None:
            raise AssertionError("vector escapes the module span")
        return {i: c for i, c in enumerate(coords) if c}

    # -- the action -----------------------------------------------------

    def action_matrix(self, i, j):
        """Sparse columns of E[i,j]: basis index -> image coordinate dict."""
        key = (i, j)
        mat = self._action.get(key)
        if mat is None:
            mat = []
            for b in self._basis:
                mat.append(self._coords(self._gen_ambient(i, j, b)))
            self._action[key] = mat
        return mat

    def act_gen(self, i, j, vec):
        mat = self.action_matrix(i, j)
        out = {}
        for r, c in vec.items():
            out = linalg.vec_axpy(out, c, mat[r])
        return out

    def act_word(self, word, vec):
        """Apply a product of generators, rightmost factor first."""
        for (i, j) in reversed(word):
            if not vec:
                return {}
            vec = self.act_gen(i, j, vec)
        return vec

    def act(self, elem, vec):
        """Apply a UeaElement (or a UPoly evaluated first) to coordinates."""
        if hasattr(elem, "eval_scalar"):
            raise TypeError("evaluate the polynomial at a sample before acting")
        if elem.N != self.N:
            raise ValueError("rank mismatch: element %d vs module %d"
                             % (elem.N, self.N))
        out = {}
        for word, c in elem.terms.items():
            img = self.act_word(word, vec)
            out = linalg.vec_axpy(out, c, img)
        return out

    def act_poly(self, poly, sample, vec):
        return self.act(poly.eval_scalar(sample), vec)

    # -- weights and highest subspaces -----------------------------------

    def weight_of(self, vec):
        """The common weight of the support, or None if mixed."""
        ws = {self.weights[r] for r in vec}
        if len(ws) == 1:
            return next(iter(ws))
        return None

    def glm_weight_of(self, vec, m):
        w = self.weight_of(vec)
        return None if w is None else w[:m]

    def weight_basis_indices(self, mu, m):
        mu = tuple(mu)
        return [r for r in range(self.dim) if self.weights[r][:m] == mu]

    def glm_highest_space(self, mu, m):
        """Basis of the vectors of gl(m)-weight mu killed by E[i,j], i<j<=m."""
        mu = tuple(mu) + (0,) * (m - len(mu))
        block = self.weight_basis_indices(mu, m)
        if not block:
            return []
        rows = []
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                mat = self.action_matrix(i, j)
                images = {}
                for col, r in enumerate(block):
                    for tgt, c in mat[r].items():
                        images.setdefault(tgt, [Fraction(0)] * len(block))[col] = c
                rows.extend(images.values())
        if not rows:
            kernel = [[Fraction(1) if t == k else Fraction(0)
                       for t in range(len(block))] for k in range(len(block))]
        else:
            kernel = linalg.nullspace(rows, len(block))
        out = []
        for dense in kernel:
            out.append({block[t]: c for t, c in enumerate(dense) if c})
        return out

    def glm_highest_weights(self, m):
        """The dominant gl(m)-weights with a nonzero highest subspace."""
        seen = []
        for w in sorted({w[:m] for w in self.weights}, reverse=True):
            if all(w[i] >= w[i + 1] for i in range(m - 1)):
                if self.glm_highest_space(w, m):
                    seen.append(w)
        return seen

    # -- the contravariant form ------------------------------------------

    def _gram_entry(self, r, s):
        if s < r:
            r, s = s, r
        key = (r, s)
        val = self._gram.get(key)
        if val is None:
            val = linalg.vec_dot(self._basis[r], self._basis[s]) / self._xi_norm
            self._gram[key] = val
        return val

    def form(self, u, v):
        """Contravariant bilinear form with <xi, xi> = 1."""
        acc = Fraction(0)
        for r, a in u.items():
            for s, b in v.items():
                if a and b:
                    acc += a * b * self._gram_entry(r, s)
        return acc

    def is_zero_vec(self, vec):
        return not vec


def build_module(lam, N, max_ambient=None):
    return GlModule(lam, N, max_ambient=max_ambient)
