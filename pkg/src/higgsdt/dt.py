"""Partition-indexed hook-product series and the invariants extracted from it.

For a curve of genus g with a twisting line bundle of degree ell (write
p = ell - 2g + 2 > 0, or p = 0 in canonical mode), the engine builds

    Z(T) = sum_lambda [(-1)^|la| q^{n(la')} t^{n(la)}]^p
           * prod_{i=1..g} N_la(a_i^{-1}, q, t) / N_la(1, q, t) * T^|la|

with the hook product

    N_la(u, q, t) = prod_{s in la} (q^{arm} - u t^{leg+1}) (q^{arm+1} - u^{-1} t^{leg}),

takes (q - 1)(1 - t) * Log Z, and clears every T^r coefficient to an honest
polynomial with integer coefficients.  Those polynomials at t = 1 give the
rank-r invariants; a half-integral power of q relating them to stack volumes
is carried symbolically by HalfPowerValue.

The alternative form H(T) replaces the genus factor by zeta values at hook
monomials and is related to Z by the substitution q -> qt, t -> t^{-1}.
"""

import math
from dataclasses import dataclass

from fractions import Fraction as Q

from .algebra import (AlgebraError, Fraction, LaurentPoly, NotDivisibleError,
                      canonical_binomial, var_table)
from .partitions import Partition, enumerate_partitions
from .series import TruncSeries, pleth_log


class IntegralityError(AlgebraError):
    """A series coefficient failed to clear to an integer polynomial."""


@dataclass(frozen=True)
class CurveParams:
    """Genus and twist degree; mode selects twisted (p > 0) or canonical (p = 0)."""

    genus: int
    ell: int
    mode: str = "twisted"

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.mode == "twisted":
            if self.p <= 0:
                raise ValueError("twisted mode needs ell > 2g - 2 (got p = %d)" % self.p)
        elif self.mode == "canonical":
            if self.genus < 1:
                raise ValueError("canonical mode needs genus >= 1")
            if self.ell != 2 * self.genus - 2:
                raise ValueError("canonical mode needs ell = 2g - 2")
        else:
            raise ValueError("mode must be 'twisted' or 'canonical'")

    @property
    def p(self):
        return self.ell - 2 * self.genus + 2

    def table(self):
        return var_table(genus=self.genus)


def _box_data(lam):
    """(arm, leg) for every box, row-major."""
    conj = lam.conjugate().parts
    out = []
    for i, part in enumerate(lam.parts, start=1):
        for j in range(1, part + 1):
            out.append((part - j, conj[j - 1] - i))
    return out


def n_lambda(table, lam, u_exps=None):
    """Hook product N_la(u, q, t), expanded.

    u_exps is the exponent tuple of an invertible monomial standing for u
    (None means u = 1).  Each box contributes
    (q^a - u t^{l+1})(q^{a+1} - u^{-1} t^l).
    """
    if u_exps is None:
        u_exps = table.zero_exps()
    neg_u = tuple(-x for x in u_exps)
    out = table.one()
    for a, l in _box_data(lam):
        e1 = table.exps(q=a)
        e2 = tuple(x + y for x, y in zip(table.exps(t=l + 1), u_exps))
        f1 = table.monomial(e1) - table.monomial(e2)
        e3 = table.exps(q=a + 1)
        e4 = tuple(x + y for x, y in zip(table.exps(t=l), neg_u))
        f2 = table.monomial(e3) - table.monomial(e4)
        out = out * f1 * f2
    return out


def n_lambda_den(table, lam):
    """N_la(1, q, t) as (sign, unit_exps, canonical factor tuple).

    The product equals sign * x^unit * prod(factors); used as a denominator
    multiset so nothing is ever expanded.
    """
    sign = 1
    unit = table.zero_exps()
    factors = []
    for a, l in _box_data(lam):
        for e1, e2 in ((table.exps(q=a), table.exps(t=l + 1)),
                       (table.exps(q=a + 1), table.exps(t=l))):
            f, u, s = canonical_binomial(e1, e2)
            sign *= s
            unit = tuple(x + y for x, y in zip(unit, u))
            factors.append(f)
    return sign, unit, tuple(factors)


def zstar_term(cp, lam, table=None):
    """One partition's term of the main series (without T^|la|)."""
    table = table or cp.table()
    p = cp.p
    w = lam.weight
    nl = lam.n_stat()
    nlc = lam.conjugate().n_stat()
    sign = -1 if (p * w) % 2 else 1
    pref = table.exps(q=p * nlc, t=p * nl)
    num = table.one()
    for i in range(1, cp.genus + 1):
        num = num * n_lambda(table, lam, table.exps(**{"a%d" % i: -1}))
    dsign, dunit, dfactors = n_lambda_den(table, lam)
    num = num.mono_mul(tuple(x - u for x, u in zip(pref, dunit)), sign * dsign)
    return Fraction(num, dfactors)


def zstar_series(cp, order):
    """Main series to T^order: coefficient r sums zstar_term over |la| = r."""
    table = cp.table()
    s = TruncSeries.one(table, order)
    for r in range(1, order + 1):
        acc = Fraction.zero(table)
        for lam in enumerate_partitions(r):
            acc = acc + zstar_term(cp, lam, table)
        s.coeffs[r] = acc
    return s


_CLEAR_CACHE = {}


def _clearing_poly(table, kind):
    """(q - 1)(1 - t) or (1 - t)(1 - qt), expanded once per table."""
    key = (table.names, kind)
    if key not in _CLEAR_CACHE:
        one = table.one()
        t = table.monomial(table.exps(t=1))
        if kind == "main":
            left = table.monomial(table.exps(q=1)) - one
        else:
            left = one - table.monomial(table.exps(q=1, t=1))
        _CLEAR_CACHE[key] = left * (one - t)
    return _CLEAR_CACHE[key]


def _clear_coeff(frac, clearer, r, what):
    f = frac.mul_poly(clearer)
    try:
        poly = f.clear_denominator()
    except NotDivisibleError as e:
        raise IntegralityError("%s coefficient r=%d is not polynomial: %s"
                               % (what, r, e)) from e
    if not poly.has_integer_coefficients():
        raise IntegralityError("%s coefficient r=%d has non-integer coefficients"
                               % (what, r))
    return LaurentPoly(poly.table,
                       {e: int(c) if isinstance(c, Q) else c
                        for e, c in poly.terms.items()})


def idt_star(cp, order, series=None):
    """Integer DT polynomials: map r -> coefficient r of (q-1)(1-t) Log Z.

    Raises IntegralityError when a coefficient fails to clear; that failure
    is meaningful (it falsifies the integrality property), never masked.
    """
    Z = series if series is not None else zstar_series(cp, order)
    L = pleth_log(Z)
    clearer = _clearing_poly(cp.table(), "main")
    return {r: _clear_coeff(L.coeffs[r], clearer, r, "idt")
            for r in range(1, order + 1)}


def rank_one_idt(cp, table=None):
    """Closed form of the r = 1 coefficient:
    (-1)^p prod_i (1 - a_i^{-1} t)(q - a_i)."""
    table = table or cp.table()
    out = table.one()
    for i in range(1, cp.genus + 1):
        ai = "a%d" % i
        out = out * (table.one() - table.monomial(table.exps(t=1, **{ai: -1})))
        out = out * (table.monomial(table.exps(q=1)) - table.monomial(table.exps(**{ai: 1})))
    if cp.p % 2:
        out = -out
    return out


def jacobian_poly(table):
    """prod_i (1 - a_i)(1 - q a_i^{-1}): the Jacobian point-count polynomial."""
    out = table.one()
    for i in range(1, table.genus + 1):
        ai = "a%d" % i
        out = out * (table.one() - table.monomial(table.exps(**{ai: 1})))
        out = out * (table.one() - table.monomial(table.exps(q=1, **{ai: -1})))
    return out


@dataclass(frozen=True)
class HalfPowerValue:
    """sign * q^{half/2} * body, keeping half-integral q powers symbolic."""

    sign: int
    half: int
    body: LaurentPoly

    def times_half_power(self, half, sign=1):
        return HalfPowerValue(self.sign * sign, self.half + half, self.body)

    def eval_exact(self, q0):
        """Exact rational value at an integer q0; needs an even half exponent
        and a genus-0 body (otherwise the Weil values are not rational)."""
        if self.half % 2:
            raise ValueError("odd half power: value is irrational at q = %d" % q0)
        if self.body.table.genus:
            raise ValueError("exact evaluation needs a genus-0 body")
        vals = [Q(q0)] * self.body.table.arity
        vals[1] = Q(1)  # bodies are t-free; any unit value works
        v = self.body.eval(vals)
        return self.sign * Q(q0) ** (self.half // 2) * v

    def __repr__(self):
        return "%sq^(%d/2) * (%r)" % ("-" if self.sign < 0 else "", self.half, self.body)


def omega(cp, r, idt_poly=None):
    """Rank-r invariant as a half-power value over IDT_r(q, 1).

    Twisted mode: q^{pr/2} * IDT_r(q, 1); canonical mode: q * IDT_r(q, 1).
    The value is independent of the degree d.
    """
    if idt_poly is None:
        idt_poly = idt_star(cp, r)[r]
    body = idt_poly.set_var_one("t")
    half = cp.p * r if cp.mode == "twisted" else 2
    return HalfPowerValue(1, half, body)


def moduli_volume(cp, r, d, idt_poly=None):
    """Volume polynomial of the smooth coprime moduli space:
    (-1)^{pr} q^{(g-1)r^2 + p r(r+1)/2} * IDT_r(q, 1)."""
    if cp.mode != "twisted":
        raise ValueError("volume formula applies in twisted mode")
    if math.gcd(r, d) != 1:
        raise ValueError("rank and degree must be coprime, got (%d, %d)" % (r, d))
    if idt_poly is None:
        idt_poly = idt_star(cp, r)[r]
    g, p = cp.genus, cp.p
    e = (g - 1) * r * r + p * (r * (r + 1) // 2)
    sign = -1 if (p * r) % 2 else 1
    body = idt_poly.set_var_one("t")
    return body.mono_mul(body.table.exps(q=e), sign)


# -- alternative formulation ------------------------------------------------


def alt_h_term(cp, lam, table=None):
    """One partition's term of the zeta-value form of the series.

    prod_s (-t^{a-l} q^a)^p * t^{(1-g)(2l+1)} * Z_X(t^h q^a), with
    Z_X(s) = prod_i (1 - a_i s)(1 - a_i^{-1} q s) / ((1 - s)(1 - q s)).
    """
    table = table or cp.table()
    p, g = cp.p, cp.genus
    w = lam.weight
    sign = -1 if (p * w) % 2 else 1
    qexp = p * lam.conjugate().n_stat()
    texp = (p * (lam.conjugate().n_stat() - lam.n_stat())
            + (1 - g) * (2 * lam.n_stat() + w))
    num = table.one()
    den_sign = 1
    den_unit = table.zero_exps()
    factors = []
    for a, l in _box_data(lam):
        h = a + l + 1
        m = table.exps(q=a, t=h)          # the argument monomial t^h q^a
        mq = table.exps(q=a + 1, t=h)     # q times it
        for i in range(1, g + 1):
            ai = "a%d" % i
            e = tuple(x + y for x, y in zip(m, table.exps(**{ai: 1})))
            num = num * (table.one() - table.monomial(e))
            e = tuple(x + y for x, y in zip(mq, table.exps(**{ai: -1})))
            num = num * (table.one() - table.monomial(e))
        for e in (m, mq):
            f, u, s = canonical_binomial(table.zero_exps(), e)
            den_sign *= s
            den_unit = tuple(x + y for x, y in zip(den_unit, u))
            factors.append(f)
    pref = table.exps(q=qexp, t=texp)
    num = num.mono_mul(tuple(x - u for x, u in zip(pref, den_unit)), sign * den_sign)
    return Fraction(num, factors)


def alt_h_series(cp, order):
    table = cp.table()
    s = TruncSeries.one(table, order)
    for r in range(1, order + 1):
        acc = Fraction.zero(table)
        for lam in enumerate_partitions(r):
            acc = acc + alt_h_term(cp, lam, table)
        s.coeffs[r] = acc
    return s


def alt_idt(cp, order, series=None):
    """Coefficients of (1 - t)(1 - qt) Log H, cleared; integer Laurent in t."""
    H = series if series is not None else alt_h_series(cp, order)
    L = pleth_log(H)
    clearer = _clearing_poly(cp.table(), "alt")
    return {r: _clear_coeff(L.coeffs[r], clearer, r, "alt-idt")
            for r in range(1, order + 1)}


def substitution_identity_check(cp, max_weight):
    """Termwise check that H under q -> qt, t -> t^{-1} recovers the main term.

    Returns a list of (partition, bool); the monomial substitution sends
    q^A t^B to q^A t^{A-B}.
    """
    table = cp.table()
    images = {table.index["q"]: table.exps(q=1, t=1),
              table.index["t"]: table.exps(t=-1)}
    out = []
    for w in range(max_weight + 1):
        for lam in enumerate_partitions(w):
            lhs = alt_h_term(cp, lam, table).substitute_monomials(images)
            rhs = zstar_term(cp, lam, table)
            out.append((lam, lhs == rhs))
    return out


def weil_symmetry_check(poly):
    """Invariance under a_i <-> a_j and under a_i -> q a_i^{-1}."""
    table = poly.table
    g = table.genus
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            images = {table.index["a%d" % i]: table.unit_exps("a%d" % j),
                      table.index["a%d" % j]: table.unit_exps("a%d" % i)}
            if poly.substitute_monomials(images) != poly:
                return False
    for i in range(1, g + 1):
        images = {table.index["a%d" % i]: table.exps(q=1, **{"a%d" % i: -1})}
        if poly.substitute_monomials(images) != poly:
            return False
    return True
