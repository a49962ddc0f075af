"""Skew-diagram combinatorics and the induced module over the quantum algebra.

For partitions mu inside lam with every skew column at most n cells
tall, the space of gl(m)-highest vectors of weight mu inside L(lam)
carries an irreducible action of the rank-n quantum algebra through
the bordered minors on rows/columns {1..m, a}.  This module constructs
its highest vector as a row-ordered product of lowering operators over
the skew cells, computes the highest weight through the clipped
partitions nu^(1..m+1), and produces the Drinfeld polynomials two ways:
telescoping the eigenvalue ratios, and reading the contents of the top
cells of the skew columns.  Both routes must agree.

Since the quantum generators applied to a fixed vector are polynomials
in the sample of degree at most m+1, exact agreement at m+n+2 distinct
rational samples proves the polynomial identities, not merely samples
them.
"""

import itertools
import math
from fractions import Fraction

from . import linalg, scalars
from .glrep import GlModule, branching_admissible, validate_partition
from .minors import qminor
from .pbw import UeaElement
from .reports import check, skipped
from .transvector import lowering_element

INF = math.inf


class SkewData:
    """Cells of lam/mu in row order, with leglengths and contents."""

    def __init__(self, lam, mu, m, n):
        lam = validate_partition(lam)
        mu = validate_partition(mu)
        if m < 1 or n < 1:
            raise ValueError("the pair needs m >= 1 and n >= 1")
        if len(mu) > m:
            raise ValueError("mu has more than m parts")
        if len(lam) > m + n:
            raise ValueError("lam has more than m + n parts")
        if not branching_admissible(lam, mu, n):
            raise ValueError("inadmissible pair: mu must sit inside lam with"
                             " skew columns at most n cells tall")
        self.lam = lam
        self.mu = mu
        self.m = m
        self.n = n
        padded = list(mu) + [0] * (len(lam) - len(mu))
        cells = []
        for r in range(1, len(lam) + 1):
            for c in range(padded[r - 1] + 1, lam[r - 1] + 1):
                cells.append((r, c))
        heights = {}
        tops = {}
        for (r, c) in cells:
            heights[c] = heights.get(c, 0) + 1
            tops[c] = min(tops.get(c, r), r)
        self.cells = [
            {"row": r, "col": c, "content": c - r,
             "leg": 1 + sum(1 for (r2, c2) in cells if c2 == c and r2 > r)}
            for (r, c) in cells]
        self.column_heights = heights
        self.column_tops = tops

    def operator_word(self):
        """(a, i) pairs for the cells in rows <= m, in row order."""
        return [(self.m + cell["leg"], cell["row"])
                for cell in self.cells if cell["row"] <= self.m]

    def word_text(self):
        out = []
        for (a, i), grp in itertools.groupby(self.operator_word()):
            k = len(list(grp))
            out.append("s[%d,%d]" % (a, i) + ("^%d" % k if k > 1 else ""))
        return " ".join(out) if out else "1"


def skew_diagram(lam, mu, m, n):
    return SkewData(lam, mu, m, n)


def _middle(a, b, c):
    return sorted([a, b, c])[1]


def clipped_partitions(lam, mu, m, n):
    """The m+1 clipped partitions nu^(i), each of length n.

    nu^(i)_a is the middle of mu_{i-1}, mu_i and lam_{a+i-1}, with
    mu_0 read as plus infinity and mu_{m+1} as zero; equivalently the
    rows of (lam_i, ..., lam_{i+n-1}) clamped into [mu_i, mu_{i-1}].
    Both descriptions are computed and must agree.
    """
    lam = validate_partition(lam)
    mu = validate_partition(mu)
    lam_at = lambda t: lam[t - 1] if 1 <= t <= len(lam) else 0
    mu_at = lambda t: (INF if t == 0 else
                       (mu[t - 1] if 1 <= t <= len(mu) else 0))
    nus = []
    for i in range(1, m + 2):
        row = tuple(_middle(mu_at(i - 1), mu_at(i), lam_at(a + i - 1))
                    for a in range(1, n + 1))
        clamp = tuple(min(mu_at(i - 1), max(mu_at(i), lam_at(a + i - 1)))
                      for a in range(1, n + 1))
        if row != clamp:
            raise AssertionError("middle rule and row clamping disagree")
        if any(row[a] < row[a + 1] for a in range(n - 1)):
            raise AssertionError("clipped rows are not a partition")
        nus.append(tuple(int(x) for x in row))
    return nus


class HighestWeightData:
    """Eigenvalue data: clipped partitions and the factored eigenvalue series.

    numerator_shifts[a-1] lists the m+1 constants c with factors (u + c)
    of the eigenvalue numerator of the a-th diagonal series; the common
    denominator is u(u-1)...(u-m).
    """

    def __init__(self, lam, mu, m, n):
        if not branching_admissible(lam, mu, n):
            raise ValueError("inadmissible pair")
        self.lam = validate_partition(lam)
        self.mu = validate_partition(mu)
        self.m = m
        self.n = n
        self.nus = clipped_partitions(lam, mu, m, n)
        self.numerator_shifts = [
            tuple(self.nus[i - 1][a - 1] - i + 1 for i in range(1, m + 2))
            for a in range(1, n + 1)]
        self.denominator_shifts = tuple(-k for k in range(m + 1))

    def eigenvalue_numerator(self, a):
        return scalars.from_shifts(self.numerator_shifts[a - 1])

    def eigenvalue_at(self, a, u):
        num = Fraction(1)
        for c in self.numerator_shifts[a - 1]:
            num *= u + c
        return num


def highest_weight_data(lam, mu, m, n):
    return HighestWeightData(lam, mu, m, n)


def drinfeld_polynomials(lam, mu, m, n):
    """Monic Drinfeld polynomials by two routes, asserted equal.

    Telescoping route: the ratio of consecutive eigenvalue series must
    be P(u+1)/P(u), which the clipped partitions solve by products of
    consecutive integer shifts.  Content route: one factor (u + c) per
    top cell of each skew column of height a.  Returns, for each
    a = 1..n-1, the sorted tuple of shifts c (the polynomial is the
    product of (u + c)).
    """
    data = HighestWeightData(lam, mu, m, n)
    sk = SkewData(lam, mu, m, n)
    out = []
    for a in range(1, n):
        shifts = []
        for k in range(1, m + 2):
            hi = data.nus[k - 1][a - 1]
            lo = data.nus[k - 1][a]
            shifts.extend(t - k + 1 for t in range(lo, hi))
        tele = tuple(sorted(shifts))
        cont = tuple(sorted(
            c - sk.column_tops[c]
            for c, h in sk.column_heights.items() if h == a))
        if tele != cont:
            raise AssertionError(
                "telescoping and content routes disagree for a=%d:"
                " %r vs %r" % (a, tele, cont))
        # the defining ratio property, as an exact polynomial identity
        pa = scalars.from_shifts(tele)
        lhs = scalars.pmul(data.eigenvalue_numerator(a), pa)
        rhs = scalars.pmul(data.eigenvalue_numerator(a + 1),
                           scalars.pshift(pa, 1))
        if not scalars.peq(lhs, rhs):
            raise AssertionError("ratio property fails for a=%d" % a)
        out.append(tele)
    return out


def yangian_highest_vector(lam, mu, m, n, module):
    """Row-ordered product of lowering operators applied to the top vector."""
    sk = SkewData(lam, mu, m, n)
    vec = module.xi
    for (a, i) in reversed(sk.operator_word()):
        vec = module.act(lowering_element("lower", i, a, m, module.N), vec)
    return vec


def generator_minor(a, b, m, N):
    """The quantum generator as a polynomial: minor on rows {1..m, a},
    columns {1..m, b}."""
    head = tuple(range(1, m + 1))
    return qminor(head + (a,), head + (b,), N)


def apply_yangian_generator(a, b, u, vec, m, module):
    """Three evaluators of the generator action on a gl(m)-highest vector.

    (1) the lower/raise expansion with Cartan products taken at the
    incoming weight, (2) its partner with the opposite composition
    order and shifted products, (3) the quantum minor applied directly.
    All three must agree; the common value is returned.
    """
    if m < 1:
        raise ValueError("the pair needs m >= 1")
    N = module.N
    u = Fraction(u)
    w = module.weight_of(vec)
    if w is None:
        raise ValueError("generator evaluation needs a weight vector")
    h = [None] + [Fraction(w[i - 1] - i + 1) for i in range(1, m + 1)]

    prod_all = Fraction(1)
    for j in range(1, m + 1):
        prod_all *= u + h[j]
    first = linalg.vec_scale(module.act_gen(a, b, vec), prod_all)
    if a == b:
        first = linalg.vec_axpy(first, (u - m) * prod_all, vec)
    acc = dict(first)
    for i in range(1, m + 1):
        coef = Fraction(1)
        for j in range(1, m + 1):
            if j == i:
                continue
            d = h[i] - h[j]
            if d == 0:
                raise ArithmeticError("vanishing Cartan difference on %r" % (w,))
            coef *= (u + h[j]) / d
        img = module.act(lowering_element("raise", i, b, m, N), vec)
        img = module.act(lowering_element("lower", i, a, m, N), img)
        acc = linalg.vec_axpy(acc, -coef, img)

    prod_all2 = Fraction(1)
    for j in range(1, m + 1):
        prod_all2 *= u + h[j] - 1
    second = linalg.vec_scale(module.act_gen(a, b, vec), prod_all2)
    if a == b:
        second = linalg.vec_axpy(second, u * prod_all2, vec)
    acc2 = dict(second)
    for i in range(1, m + 1):
        coef = Fraction(1)
        for j in range(1, m + 1):
            if j == i:
                continue
            coef *= (u + h[j] - 1) / (h[i] - h[j])
        img = module.act(lowering_element("lower", i, a, m, N), vec)
        img = module.act(lowering_element("raise", i, b, m, N), img)
        acc2 = linalg.vec_axpy(acc2, -coef, img)

    direct = module.act(generator_minor(a, b, m, N).eval_scalar(u), vec)
    if linalg.vec_sub(acc, acc2) != {} or linalg.vec_sub(acc, direct) != {}:
        raise AssertionError(
            "generator evaluators disagree at a=%d b=%d u=%s" % (a, b, u))
    return direct


def _samples(m, n):
    return [Fraction(t) for t in range(2, m + n + 4)]


def verify_elementary(lam, mu, m, n, max_ambient=None, with_cyclicity=True):
    """End-to-end checks of the induced highest-weight module structure.

    Builds L(lam) at rank m+n, forms the candidate highest vector,
    and verifies: membership in the gl(m)-highest mu-weight space,
    annihilation by the upper-triangular generators, the eigenvalue
    product for the diagonal ones, the extra vanishing of the critical
    lowering operator when the clipped rows collide, the adjointness of
    opposite generators under the contravariant form, and that repeated
    generator applications span the whole multiplicity space.
    """
    checks = []
    lam = validate_partition(lam)
    mu = validate_partition(mu)
    N = m + n
    data = HighestWeightData(lam, mu, m, n)
    drinfeld_polynomials(lam, mu, m, n)
    checks.append(check("drinfeld-consistency",
                        "telescoping route equals content route", True))
    module = GlModule(lam, N, max_ambient=max_ambient)
    zeta = yangian_highest_vector(lam, mu, m, n, module)
    checks.append(check("highest-vector-nonzero", "zeta != 0", bool(zeta)))
    mu_full = tuple(mu) + (0,) * (m - len(mu))
    in_space = module.weight_of(zeta) is not None and \
        module.weight_of(zeta)[:m] == mu_full
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            in_space &= module.act_gen(i, j, zeta) == {}
    checks.append(check("highest-vector-in-multiplicity-space",
                        "zeta is gl(m)-highest of weight mu", in_space))

    samples = _samples(m, n)
    ok_annihilate = True
    ok_eigen = True
    singular = []
    for u in samples:
        for a in range(m + 1, N + 1):
            for b in range(m + 1, N + 1):
                try:
                    img = apply_yangian_generator(a, b, u, zeta, m, module)
                except ArithmeticError as exc:
                    singular.append(str(exc))
                    continue
                if a < b:
                    ok_annihilate &= img == {}
                elif a == b:
                    lamval = data.eigenvalue_at(a - m, u)
                    ok_eigen &= linalg.vec_sub(
                        img, linalg.vec_scale(zeta, lamval)) == {}
    checks.append(check(
        "upper-generators-annihilate",
        "T_ab(u) zeta = 0 for a < b at %d samples (degree bound makes this"
        " a proof)" % len(samples), ok_annihilate))
    checks.append(check(
        "diagonal-eigenvalues",
        "T_aa(u) zeta = prod_i (u + nu^(i)_a - i + 1) zeta", ok_eigen))

    checks.append(_check_critical_vanishing(lam, mu, m, n, module, zeta))

    basis = module.glm_highest_space(mu_full, m)
    ok_adj = True
    for u in samples[:2]:
        for a in range(m + 1, N + 1):
            for b in range(m + 1, N + 1):
                tab = generator_minor(a, b, m, N).eval_scalar(u)
                tba = generator_minor(b, a, m, N).eval_scalar(u)
                for x in basis:
                    tx = module.act(tab, x)
                    for y in basis:
                        ok_adj &= module.form(tx, y) == module.form(
                            x, module.act(tba, y))
    checks.append(check(
        "generator-adjointness",
        "<T_ab(u) x, y> = <x, T_ba(u) y> on the multiplicity space", ok_adj))

    if with_cyclicity:
        span = linalg.Echelon()
        span.insert(zeta)
        frontier = [zeta]
        gens = [(a, b) for a in range(m + 1, N + 1)
                for b in range(m + 1, N + 1)]
        mats = {(a, b): [generator_minor(a, b, m, N).eval_scalar(u)
                         for u in samples] for (a, b) in gens}
        while frontier:
            nxt = []
            for v in frontier:
                for (a, b) in gens:
                    for op in mats[(a, b)]:
                        img = module.act(op, v)
                        if img and span.insert(img) is not None:
                            nxt.append(img)
            frontier = nxt
        checks.append(check(
            "cyclicity",
            "repeated generator applications to zeta span the multiplicity"
            " space", len(span) == len(basis),
            witness={"span": len(span), "dim": len(basis)}))
    if singular:
        checks.append(skipped("singular-samples",
                              "samples skipped for vanishing Cartan"
                              " differences", singular))
    return checks


def random_admissible_pair(rng, max_part=12, max_len=6):
    """A random (lam, mu, m, n) with admissible skew columns."""
    length = rng.randint(1, max_len)
    lam = []
    top = max_part
    for _ in range(length):
        top = rng.randint(0, top)
        lam.append(top)
    lam = validate_partition(lam)
    if not lam:
        lam = (rng.randint(1, max_part),)
    # a random subpartition, clamped from the top so it stays decreasing
    fixed = []
    cap = INF
    for part in lam:
        val = min(rng.randint(0, part), cap)
        fixed.append(val)
        cap = val
    mu = validate_partition(fixed)
    heights = {}
    padded = list(mu) + [0] * (len(lam) - len(mu))
    for r in range(len(lam)):
        for c in range(padded[r] + 1, lam[r] + 1):
            heights[c] = heights.get(c, 0) + 1
    n = max(heights.values(), default=1) + rng.randint(0, 2)
    m = rng.randint(max(1, len(mu), len(lam) - n), max_len)
    return lam, mu, m, n


def sweep_drinfeld_equivalence(count=500, seed=0):
    """Randomized sweep of the two Drinfeld routes; returns mismatches."""
    import random
    rng = random.Random(seed)
    mismatches = []
    done = 0
    while done < count:
        lam, mu, m, n = random_admissible_pair(rng)
        if not branching_admissible(lam, mu, n):
            continue
        try:
            drinfeld_polynomials(lam, mu, m, n)
        except AssertionError as exc:
            mismatches.append((lam, mu, m, n, str(exc)))
        done += 1
    return done, mismatches


def _check_critical_vanishing(lam, mu, m, n, module, zeta):
    """Extra lowering vanishes when the top skew row has collided rows.

    With k the top row of the skew diagram (when k <= m) and l the
    leglength of its first cell, mu_k = lam_{k+l} forces the lowering
    operator for (m+l, k) to kill the highest vector.
    """
    padded = list(mu) + [0] * (len(lam) - len(mu) + m)
    k = None
    for r in range(1, len(lam) + 1):
        if padded[r - 1] < lam[r - 1]:
            k = r
            break
    if k is None or k > m:
        return check("critical-lowering-vanishes",
                     "no applicable configuration (empty top rows)", True)
    sk = SkewData(lam, mu, m, n)
    leg = next(cell["leg"] for cell in sk.cells
               if cell["row"] == k and cell["col"] == padded[k - 1] + 1)
    lam_at = lambda t: lam[t - 1] if t <= len(lam) else 0
    if padded[k - 1] != lam_at(k + leg):
        return check("critical-lowering-vanishes",
                     "vanishing condition mu_k = lam_{k+l} not triggered",
                     True)
    img = module.act(
        lowering_element("lower", k, m + leg, m, module.N), zeta)
    return check("critical-lowering-vanishes",
                 "s_{m+l,k} zeta = 0 when mu_k = lam_{k+l}", img == {})
