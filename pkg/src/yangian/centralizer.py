"""Finite-rank centralizer tooling for the chain gl(n-1) inside gl(n).

capelli_coeffs expands the normalized determinant of 1 + E/u into
central elements; centralizer_project is the rank-lowering algebra
homomorphism defined on the centralizer of E[n,n]: rewrite in a basis
whose order puts every column-n generator (including E[n,n]) rightmost
and every row-n generator leftmost, then delete the monomials touching
index n.  Weight invariance under ad E[n,n] guarantees that the deleted
part is exactly the left-ideal component generated by the column-n
generators, so the rule realizes the direct-sum projection and is
multiplicative on the centralizer; the randomized multiplicativity
check below guards that argument.
"""

import itertools
import random
from fractions import Fraction

from . import scalars
from .glrep import GlModule
from .linalg import det
from .minors import PolyFraction, qdet, qminor
from .pbw import Ordering, UeaElement, commutator
from .reports import check

_NN_LAST = {}


def _nn_last_ordering(n):
    ordering = _NN_LAST.get(n)
    if ordering is None:
        def key(g, n=n):
            i, j = g
            cls = 2 if j == n else (0 if i == n else 1)
            return (cls, i, j)
        ordering = Ordering(key)
        _NN_LAST[n] = ordering
    return ordering


def capelli_series(n):
    """The normalized determinant of 1 + E/u at rank n as a PolyFraction."""
    return PolyFraction(qdet(n), scalars.falling(n))


def capelli_coeffs(n):
    """Central coefficients of the expansion of the normalized determinant.

    Returns the coefficients of u^-1 ... u^-n; each commutes with the
    whole algebra.
    """
    return capelli_series(n).series(n)[1:]


def centralizer_project(x, n):
    """Drop the index-n content of an element commuting with E[n,n].

    Returns the image at rank n - 1; raises ValueError when the input
    is not in the centralizer of E[n,n] (the rule only realizes the
    projection there).
    """
    if x.N != n:
        raise ValueError("element has rank %d, expected %d" % (x.N, n))
    if not commutator(x, UeaElement.gen(n, n, n)).is_zero():
        raise ValueError("element does not commute with E[%d,%d]" % (n, n))
    reordered = x.reordered(_nn_last_ordering(n))
    out = {}
    for word, c in reordered.items():
        if any(i == n or j == n for (i, j) in word):
            continue
        out[word] = c
    return UeaElement(n - 1, out)


def bordered_capelli(i, j, m, n):
    """The normalized bordered determinant on rows {i, m+1..n}, cols {j, m+1..n}.

    Returns (numerator polynomial, scalar denominator).  The series
    coefficients commute with every E[a,b] for m < a, b <= n.
    """
    if not (1 <= i <= m and 1 <= j <= m and m < n):
        raise ValueError("need 1 <= i,j <= m < n")
    tail = tuple(range(m + 1, n + 1))
    numer = qminor((i,) + tail, (j,) + tail, n)
    return numer, scalars.falling(n - m + 1)


def check_capelli_eigenvalue(lam, n, max_ambient=None):
    """The normalized determinant acts on the highest vector by the
    product of (u + lam_i - i + 1)/(u - i + 1) over i = 1..n.

    Cleared of the common falling-factorial denominator this is the
    polynomial statement: the determinant numerator applied to the
    highest vector equals prod_i (u + lam_i - i + 1) times it.
    """
    module = GlModule(lam, n, max_ambient=max_ambient)
    numer = qdet(n)
    lam_p = list(module.lam) + [0] * (n - len(module.lam))
    expect = scalars.from_shifts([lam_p[i - 1] - i + 1 for i in range(1, n + 1)])
    got = []
    ok = True
    for k in range(numer.degree() + 1):
        img = module.act(numer.coeff(k), module.xi)
        coeff = _proportionality(module, img)
        if coeff is None:
            ok = False
            break
        got.append(coeff)
    ok = ok and scalars.trim(got) == scalars.trim(expect)
    return [check("capelli-eigenvalue lam=%s n=%d" % (tuple(module.lam), n),
                  "determinant numerator acts on the highest vector by"
                  " prod (u + lam_i - i + 1)",
                  ok, witness=None if ok else
                  {"got": [str(c) for c in got],
                   "want": [str(c) for c in expect]})]


def _proportionality(module, img):
    """Scalar c with img = c * xi, or None."""
    if not img:
        return Fraction(0)
    ratio = None
    xi = module.xi
    if set(img) != set(xi):
        return None
    for r, c in xi.items():
        q = img[r] / c
        if ratio is None:
            ratio = q
        elif ratio != q:
            return None
    return ratio


def check_centralizer_projection(nmax=4, order=None):
    """Projection compatibility of the determinant series across ranks."""
    checks = []
    for n in range(2, nmax + 1):
        depth = order or n
        top = capelli_series(n).series(depth)
        down = capelli_series(n - 1).series(depth)
        ok = True
        for r in range(1, depth + 1):
            if centralizer_project(top[r], n) != down[r]:
                ok = False
                break
        checks.append(check(
            "projection-compatibility n=%d" % n,
            "rank-lowering projection maps the determinant series termwise",
            ok))
    return checks


def _centralizer_pool(n):
    """Elements of the centralizer of E[n,n] used for randomized products."""
    pool = list(capelli_coeffs(n))
    for m in range(1, n):
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                numer, _ = bordered_capelli(i, j, m, n)
                pool.extend(c for c in numer.coeffs if not c.is_zero())
    # keep the pool exact but small-degree
    return [p for p in pool if p.degree() <= 3 and not p.is_zero()]


def check_projection_multiplicative(n, pairs=20, seed=0):
    """pi(xy) = pi(x) pi(y) on randomized centralizer pairs."""
    rng = random.Random(seed)
    pool = _centralizer_pool(n)
    ok = True
    tried = 0
    while tried < pairs:
        x = rng.choice(pool)
        y = rng.choice(pool)
        lhs = centralizer_project(x * y, n)
        rhs = centralizer_project(x, n) * centralizer_project(y, n)
        ok &= lhs == rhs
        tried += 1
    return [check("projection-multiplicative n=%d pairs=%d" % (n, pairs),
                  "pi(xy) = pi(x) pi(y) on the centralizer", ok)]


def check_bordered_commutes(m, n):
    """Bordered determinant coefficients centralize the lower-right block."""
    ok = True
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            numer, _ = bordered_capelli(i, j, m, n)
            for a in range(m + 1, n + 1):
                for b in range(m + 1, n + 1):
                    for c in numer.coeffs:
                        ok &= commutator(c, UeaElement.gen(n, a, b)).is_zero()
    return [check("bordered-centralizes m=%d n=%d" % (m, n),
                  "bordered determinant coefficients commute with the"
                  " E[a,b], m < a,b <= n", ok)]


def _bordered_series(i, j, m, n):
    # m == n degenerates to the plain matrix entry (u + E)_{ij} over u
    tail = tuple(range(m + 1, n + 1))
    numer = qminor((i,) + tail, (j,) + tail, n)
    return PolyFraction(numer, scalars.falling(n - m + 1))


def check_bordered_projection(m, n, order=None):
    """pi_n of the rank-n bordered series is the rank-(n-1) bordered series."""
    depth = order or n
    ok = True
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            top = _bordered_series(i, j, m, n).series(depth)
            down = _bordered_series(i, j, m, n - 1).series(depth)
            for r in range(depth + 1):
                if centralizer_project(top[r], n) != down[r]:
                    ok = False
    return [check("bordered-projection m=%d n=%d" % (m, n),
                  "rank-lowering projection carries the bordered series"
                  " to its rank-(n-1) counterpart", ok)]


def check_classical_sylvester(m, n, trials=10, seed=0):
    """Numeric block-determinant identity over random rational matrices.

    For X_ij = det(1 + x/u)_{B_i B_j} with B_i = {i, m+1..n}:
    det X = det(1 + x/u) * det((1 + x/u)_BB)^(m-1), exactly over the
    rationals.
    """
    rng = random.Random(seed)
    ok = True
    done = 0
    while done < trials:
        u = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if u == 0:
            continue
        x = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
              for _ in range(n)] for _ in range(n)]
        a = [[x[i][j] / u + (1 if i == j else 0) for j in range(n)]
             for i in range(n)]
        tail = list(range(m, n))
        X = [[det([[a[r][c] for c in [jj] + tail] for r in [ii] + tail])
              for jj in range(m)] for ii in range(m)]
        lhs = det(X)
        rhs = det(a) * det([[a[r][c] for c in tail] for r in tail]) ** (m - 1)
        ok &= lhs == rhs
        done += 1
    return [check("classical-sylvester m=%d n=%d trials=%d" % (m, n, trials),
                  "det of the bordered-minor matrix factors through the"
                  " block determinant", ok)]
