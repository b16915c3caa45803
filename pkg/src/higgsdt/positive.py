"""Positive (nilpotent-cone side) series and the stabilization comparison.

The extra ingredient over the main series is a symmetrized rational function
f in auxiliary variables z_1..z_n:

    f(z; q, a) = prod_i prod_k (1 - a_k^{-1}) / (1 - a_k^{-1} z_i)
        * sum_{sigma in S_n} sigma( prod_{i>j} [ (1 - z_i/z_j)^{-1}
              * prod_k (1 - a_k^{-1} z_i/z_j) / (1 - q a_k^{-1} z_i/z_j) ]
          * prod_{i>j+1} (1 - q z_i/z_j) * prod_{i>=2} (1 - z_i) )

evaluated at z_i = q^{i-n} t^{lambda_i}.  Each sigma-term is specialized
before summation, so only distinct-monomial denominators ever appear.

The degree-d slices of (q - 1) Log of the resulting T-series stabilize, for
d large, to the d-independent invariant of the main pipeline; entries are
stored q^{-pr/2}-normalized (integer q powers only), with the half-power
normalization recorded on the table.
"""

from dataclasses import dataclass
from itertools import permutations

from .algebra import Fraction, ZeroDenominatorError, t_expand, var_table
from .partitions import Partition, enumerate_partitions
from .series import TruncSeries, pleth_log
from .dt import CurveParams, idt_star, zstar_series, zstar_term

MAX_SN = 4  # n! symmetrization terms; raise deliberately, not by accident


def _add(e1, e2):
    return tuple(x + y for x, y in zip(e1, e2))


def _sub(e1, e2):
    return tuple(x - y for x, y in zip(e1, e2))


def f_sum(table, genus, values, max_n=MAX_SN):
    """The symmetrized sum with w_i = x^values[i] (monomials, pairwise distinct)."""
    n = len(values)
    if n > max_n:
        raise ValueError("n = %d exceeds the S_n cap %d" % (n, max_n))
    values = [tuple(v) for v in values]
    if len(set(values)) != n:
        raise ZeroDenominatorError("specialized z-values must be pairwise distinct")
    zero = table.zero_exps()
    qe = table.exps(q=1)
    ainv = [table.exps(**{"a%d" % k: -1}) for k in range(1, genus + 1)]

    # prefactor prod_i prod_k (1 - a_k^{-1}) / (1 - a_k^{-1} w_i)
    pref = Fraction.one(table)
    for w in values:
        for ak in ainv:
            pref = pref.mul_binomial(zero, ak)
            pref = pref.div_binomial(zero, _add(ak, w))

    total = Fraction.zero(table)
    for sigma in permutations(range(n)):
        w = [values[s] for s in sigma]
        term = Fraction.one(table)
        for i in range(n):
            for j in range(i):
                ratio = _sub(w[i], w[j])
                term = term.div_binomial(zero, ratio)
                for ak in ainv:
                    term = term.mul_binomial(zero, _add(ak, ratio))
                    term = term.div_binomial(zero, _add(qe, _add(ak, ratio)))
                if i > j + 1:
                    term = term.mul_binomial(zero, _add(qe, ratio))
        for i in range(1, n):
            term = term.mul_binomial(zero, w[i])
        total = total + term
    return pref * total


def f_symbolic(n, genus, max_n=MAX_SN):
    """f with formal z_1..z_n; returns (table, Fraction)."""
    table = var_table(genus=genus, nz=n)
    values = [table.unit_exps("z%d" % i) for i in range(1, n + 1)]
    return table, f_sum(table, genus, values, max_n=max_n)


def f_lambda(cp, lam, n=None, max_n=MAX_SN):
    """f specialized at z_i = q^{i-n} t^{lambda_i} (parts padded with zeros).

    Independent of the choice of n >= len(lam).
    """
    table = cp.table()
    if n is None:
        n = lam.length
    if n < lam.length:
        raise ValueError("n must be at least the number of parts")
    parts = lam.parts + (0,) * (n - lam.length)
    values = [table.exps(q=i - n, t=parts[i - 1]) for i in range(1, n + 1)]
    return f_sum(table, cp.genus, values, max_n=max_n)


def inductive_property_check(n, genus, max_n=MAX_SN + 1):
    """f(1, z_1..z_n) == f(q z_1, ..., q z_n), checked symbolically."""
    table = var_table(genus=genus, nz=n)
    zs = [table.unit_exps("z%d" % i) for i in range(1, n + 1)]
    lhs = f_sum(table, genus, [table.zero_exps()] + zs, max_n=max_n)
    qe = table.exps(q=1)
    rhs = f_sum(table, genus, [_add(qe, z) for z in zs], max_n=max_n)
    return lhs == rhs


def laurent_property_check(n, genus, max_n=MAX_SN):
    """f times prod_k [prod_i (1 - a_k^{-1} z_i) prod_{i != j} (1 - q a_k^{-1} z_i/z_j)]
    clears to a Laurent polynomial (all difference denominators cancel)."""
    table, f = f_symbolic(n, genus, max_n=max_n)
    zero = table.zero_exps()
    qe = table.exps(q=1)
    zs = [table.unit_exps("z%d" % i) for i in range(1, n + 1)]
    for k in range(1, genus + 1):
        ak = table.exps(**{"a%d" % k: -1})
        for i in range(n):
            f = f.mul_binomial(zero, _add(ak, zs[i]))
            for j in range(n):
                if i != j:
                    f = f.mul_binomial(zero, _add(qe, _add(ak, _sub(zs[i], zs[j]))))
    try:
        f.clear_denominator()
        return True
    except Exception:
        return False


def alpha_zero_check(n, genus, max_n=MAX_SN):
    """f equals 1 when every a_k^{-1} is set to 0.

    Implemented honestly by deforming a_k^{-1} to u a_k^{-1} with a fresh
    variable u and evaluating the summed fraction at u = 0.
    """
    table = var_table(genus=genus, nz=n, with_u=True)
    zero = table.zero_exps()
    qe = table.exps(q=1)
    ue = table.exps(u=1)
    values = [table.unit_exps("z%d" % i) for i in range(1, n + 1)]
    ainv = [_add(ue, table.exps(**{"a%d" % k: -1})) for k in range(1, genus + 1)]

    pref = Fraction.one(table)
    for w in values:
        for ak in ainv:
            pref = pref.mul_binomial(zero, ak)
            pref = pref.div_binomial(zero, _add(ak, w))
    total = Fraction.zero(table)
    for sigma in permutations(range(n)):
        w = [values[s] for s in sigma]
        term = Fraction.one(table)
        for i in range(n):
            for j in range(i):
                ratio = _sub(w[i], w[j])
                term = term.div_binomial(zero, ratio)
                for ak in ainv:
                    term = term.mul_binomial(zero, _add(ak, ratio))
                    term = term.div_binomial(zero, _add(qe, _add(ak, ratio)))
                if i > j + 1:
                    term = term.mul_binomial(zero, _add(qe, ratio))
        for i in range(1, n):
            term = term.mul_binomial(zero, w[i])
        total = total + term
    f = pref * total
    at_zero = f.specialize_var_zero("u")
    return at_zero == Fraction.one(table)


def zplus_series(cp, order, max_n=MAX_SN):
    """Positive series: the main term times f_{lambda'} per partition."""
    if cp.mode != "twisted":
        raise ValueError("positive series is defined in twisted mode")
    table = cp.table()
    s = TruncSeries.one(table, order)
    for r in range(1, order + 1):
        acc = Fraction.zero(table)
        for lam in enumerate_partitions(r):
            acc = acc + zstar_term(cp, lam, table) * f_lambda(cp, lam.conjugate(),
                                                              max_n=max_n)
        s.coeffs[r] = acc
    return s


@dataclass
class OmegaPlusTable:
    """(r, d) -> Fraction in q and the Weil variables.

    Entries carry the normalization q^{-p r/2}: the honest degree-d invariant
    is q^{p r / 2} times the stored entry (recorded in half_normalization).
    """

    cp: CurveParams
    order: int
    depth: int
    entries: dict

    def half_normalization(self, r):
        return -self.cp.p * r

    def __getitem__(self, key):
        return self.entries[key]


def omega_plus(cp, order, depth, max_n=MAX_SN):
    """Degree table of the positive invariants, t-expanded to the given depth."""
    Z = zplus_series(cp, order, max_n=max_n)
    L = pleth_log(Z)
    table = cp.table()
    qminus1 = table.monomial(table.exps(q=1)) - table.one()
    entries = {}
    for r in range(1, order + 1):
        fr = L.coeffs[r].mul_poly(qminus1)
        lo = min(0, fr.num.var_range("t")[0])
        coeffs = t_expand(fr, depth, lo=lo)
        for i in range(-lo):
            if not coeffs[i].is_zero():
                raise ArithmeticError("negative t-degree %d survives at r=%d"
                                      % (lo + i, r))
        for d in range(depth + 1):
            entries[(r, d)] = coeffs[d - lo]
    return OmegaPlusTable(cp, order, depth, entries)


@dataclass
class StabilizationReport:
    r: int
    depth: int
    stable_from: int   # least degree from which all later entries coincide
    matches: bool      # the stable value equals q^{-pr/2} * Omega_r
    target: object

    def ok(self):
        return self.stable_from >= 0 and self.matches


def stabilization_check(cp, r, depth=8, table=None, max_n=MAX_SN):
    """Locate the degree from which the entries become constant and compare
    the constant with the main invariant at t = 1."""
    tab = table if table is not None else omega_plus(cp, r, depth, max_n=max_n)
    target = Fraction(idt_star(cp, r)[r].set_var_one("t"))
    entries = [tab[(r, d)] for d in range(depth + 1)]
    stable_from = depth
    while stable_from > 0 and entries[stable_from - 1] == entries[depth]:
        stable_from -= 1
    if stable_from == depth:
        # a single trailing value is no evidence of stability
        return StabilizationReport(r, depth, -1, False, target)
    return StabilizationReport(r, depth, stable_from,
                               entries[depth] == target, target)
