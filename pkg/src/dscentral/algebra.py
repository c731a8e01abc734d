"""Sparse exact arithmetic: differential polynomials, rational functions,
fraction-free matrix elimination.

A variable is a tuple (family, index, order), e.g. ('u', 2, 0) for u_2 or
('a', 1, 3) for the third x-derivative of a_1.  A monomial is a sorted
tuple of (variable, exponent) pairs; exponents may be negative (Laurent).
A Poly maps monomials to Fraction coefficients.
"""

from fractions import Fraction
from math import gcd as _igcd


def var(family, index=0, order=0):
    return (family, index, order)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        e2 = d.pop(v, 0) + e
        if e2:
            d[v] = e2
    return tuple(sorted(d.items()))


def _mono_div(m1, m2):
    # m1 / m2, allowing negative exponents in the result
    return _mono_mul(m1, tuple((v, -e) for v, e in m2))


def _mono_divides(m2, m1):
    # does m2 divide m1 in the polynomial (non-Laurent) sense
    d = dict(m1)
    return all(d.get(v, 0) >= e for v, e in m2)


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def num(c):
        c = Fraction(c)
        return Poly({(): c} if c else {})

    @staticmethod
    def of(family, index=0, order=0, exp=1):
        if exp == 0:
            return Poly.num(1)
        return Poly({(((family, index, order), exp),): Fraction(1)})

    @staticmethod
    def from_var(v, exp=1):
        if exp == 0:
            return Poly.num(1)
        return Poly({((v, exp),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == () for m in self.terms)

    def constant(self):
        """Value of a constant Poly as a Fraction."""
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.terms.get((), Fraction(0))

    def variables(self):
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.num(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.num(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            c2 = t.get(m, 0) + c
            if c2:
                t[m] = c2
            else:
                t.pop(m, None)
        return Poly(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.num(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c0 = Fraction(other)
            if not c0:
                return Poly()
            return Poly({m: c * c0 for m, c in self.terms.items()})
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = t.get(m, 0) + c1 * c2
                if c:
                    t[m] = c
                else:
                    t.pop(m, None)
        return Poly(t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Poly")
        r = Poly.num(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self.divexact(other)
        return self * (Fraction(1) / Fraction(other))

    def diff(self, v):
        """Partial derivative with respect to one variable."""
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            m2 = tuple(sorted(d.items()))
            c2 = t.get(m2, 0) + c * e
            if c2:
                t[m2] = c2
            else:
                t.pop(m2, None)
        return Poly(t)

    def xdiff(self, frozen=frozenset()):
        """Total x-derivative: (family, i, k) -> (family, i, k+1).

        Families listed in `frozen` are treated as constants.

        >>> Poly.of('u', 1).xdiff() == Poly.of('u', 1, 1)
        True
        >>> p = Poly.of('u', 1) ** 2 + Poly.of('u', 2, 1)
        >>> p.xdiff() == 2 * Poly.of('u', 1) * Poly.of('u', 1, 1) + Poly.of('u', 2, 2)
        True
        """
        out = Poly()
        for m, c in self.terms.items():
            for i, (v, e) in enumerate(m):
                if v[0] in frozen:
                    continue
                d = dict(m)
                if e == 1:
                    del d[v]
                else:
                    d[v] = e - 1
                v2 = (v[0], v[1], v[2] + 1)
                d[v2] = d.get(v2, 0) + 1
                if d[v2] == 0:
                    del d[v2]
                m2 = tuple(sorted(d.items()))
                out = out + Poly({m2: c * e})
        return out

    def subs(self, mapping):
        """Substitute variables by Polys or numbers.  Variables occurring
        with negative exponent may only be mapped to nonzero numbers."""
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.num(c)
            for v, e in m:
                if v in mapping:
                    val = mapping[v]
                    if isinstance(val, Poly):
                        if e < 0:
                            if not val.is_constant():
                                raise ValueError("negative power substitution")
                            term = term * (Fraction(1) / val.constant()) ** (-e)
                        else:
                            term = term * val ** e
                    else:
                        val = Fraction(val)
                        term = term * (val ** e if e >= 0 else (1 / val) ** (-e))
                else:
                    term = term * Poly({((v, e),): Fraction(1)})
            out = out + term
        return out

    def coeffs_in(self, v):
        """Split as a polynomial in one variable: dict exponent -> Poly."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.pop(v, 0)
            m2 = tuple(sorted(d.items()))
            p = out.setdefault(e, Poly())
            c2 = p.terms.get(m2, 0) + c
            if c2:
                p.terms[m2] = c2
            else:
                p.terms.pop(m2, None)
        return {e: p for e, p in out.items() if not p.is_zero()}

    def coeff_of(self, mono):
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def _laurent_shift(self):
        # minimal exponent per variable, to clear negative powers
        lo = {}
        for m in self.terms:
            for v, e in m:
                if e < lo.get(v, 0):
                    lo[v] = e
        return tuple((v, -e) for v, e in sorted(lo.items()) if e < 0)

    def divexact(self, other):
        """Exact division; raises ValueError when not divisible.

        Laurent exponents are cleared by a monomial shift first.
        """
        if not isinstance(other, Poly):
            return self * (Fraction(1) / Fraction(other))
        if other.is_zero():
            raise ZeroDivisionError("division by zero Poly")
        if self.is_zero():
            return Poly()
        if other.is_constant():
            return self * (Fraction(1) / other.constant())
        s1 = self._laurent_shift()
        s2 = other._laurent_shift()
        if s1 or s2:
            a = Poly({_mono_mul(m, s1): c for m, c in self.terms.items()})
            b = Poly({_mono_mul(m, s2): c for m, c in other.terms.items()})
            q = a.divexact(b)
            back = _mono_div(s2, s1)
            return Poly({_mono_mul(m, back): c for m, c in q.terms.items()})
        allv = sorted(self.variables() | other.variables())

        def key(m):
            d = dict(m)
            vec = tuple(d.get(v, 0) for v in allv)
            return (sum(vec), vec)

        lead = max(other.terms, key=key)
        lc = other.terms[lead]
        rem = Poly(dict(self.terms))
        quot = {}
        while not rem.is_zero():
            m = max(rem.terms, key=key)
            if not _mono_divides(lead, m):
                raise ValueError("not an exact division")
            qm = _mono_div(m, lead)
            qc = rem.terms[m] / lc
            quot[qm] = quot.get(qm, 0) + qc
            rem = rem - Poly({qm: qc}) * other
        return Poly({m: c for m, c in quot.items() if c})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            vs = ["%s_%d^(%d)%s" % (v[0], v[1], v[2], "" if e == 1 else "**%d" % e)
                  for v, e in m]
            parts.append("%s*%s" % (c, "*".join(vs)) if vs else str(c))
        return " + ".join(parts)

    __repr__ = __str__


def antiderivative(p, frozen=frozenset()):
    """Inverse of the total x-derivative; raises ValueError if `p` is not
    a total derivative.  Greedy: repeatedly strip the term with the
    highest-order jet variable."""
    rem = p
    out = Poly()
    for _ in range(20000):
        if rem.is_zero():
            return out
        best = None
        for m, c in rem.terms.items():
            top = max(((v[2], v) for v, e in m if v[0] not in frozen), default=None)
            if top is None or top[1][2] == 0:
                raise ValueError("not a total x-derivative")
            key = (top[0], m)
            if best is None or key > best[0]:
                best = (key, m, c, top[1])
        _, m, c, v = best
        d = dict(m)
        e = d[v]
        if e == 1:
            del d[v]
        else:
            d[v] = e - 1
        v2 = (v[0], v[1], v[2] - 1)
        d[v2] = d.get(v2, 0) + 1
        cand = Poly({tuple(sorted(d.items())): c / Fraction(d[v2])})
        out = out + cand
        rem = rem - cand.xdiff(frozen)
    raise ValueError("antiderivative did not terminate")


def _to_sympy(p, symmap):
    import sympy
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for v, e in m:
            if v not in symmap:
                symmap[v] = sympy.Symbol("x%d" % len(symmap))
            t *= symmap[v] ** e
        expr += t
    return expr


def _from_sympy(expr, revmap):
    import sympy
    p = sympy.Poly(expr, *revmap.keys()) if revmap else None
    out = Poly()
    if p is None:
        c = sympy.Rational(expr)
        return Poly.num(Fraction(int(c.p), int(c.q)))
    gens = list(revmap.keys())
    for exps, coeff in p.terms():
        coeff = sympy.Rational(coeff)
        mono = tuple(sorted((revmap[g], e) for g, e in zip(gens, exps) if e))
        out = out + Poly({mono: Fraction(int(coeff.p), int(coeff.q))})
    return out


def poly_gcd(a, b):
    """Multivariate gcd through sympy, used to keep rational functions small."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    sa, sb = a._laurent_shift(), b._laurent_shift()
    if sa or sb:
        a = Poly({_mono_mul(m, sa): c for m, c in a.terms.items()})
        b = Poly({_mono_mul(m, sb): c for m, c in b.terms.items()})
    import sympy
    symmap = {}
    ea = _to_sympy(a, symmap)
    eb = _to_sympy(b, symmap)
    g = sympy.gcd(ea, eb)
    revmap = {s: v for v, s in symmap.items()}
    return _from_sympy(g, revmap)


class RatFunc:
    """Quotient of two Polys, reduced opportunistically."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, Poly):
            num = Poly.num(num)
        if den is None:
            den = Poly.num(1)
        elif not isinstance(den, Poly):
            den = Poly.num(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not den.is_constant() and not num.is_zero():
            try:
                num = num.divexact(den)
                den = Poly.num(1)
            except ValueError:
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.divexact(g)
                    den = den.divexact(g)
        if den.is_constant():
            c = den.constant()
            if c != 1:
                num = num * (Fraction(1) / c)
                den = Poly.num(1)
        self.num = num
        self.den = den

    @staticmethod
    def of(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x, reduce=False)
        return RatFunc(Poly.num(x), reduce=False)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        other = RatFunc.of(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def __add__(self, other):
        other = RatFunc.of(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) - self

    def __mul__(self, other):
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.of(other)
        if other.num.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other) / self

    def subs(self, mapping):
        n = self.num.subs(mapping)
        d = self.den.subs(mapping)
        return RatFunc(n, d)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)), Poly() if isinstance(A[i][0], Poly) else 0)
             for j in range(m)] for i in range(n)]


class RFMatrix:
    """Matrix over the rational function field.

    Inversion and determinants go through fraction-free (Bareiss style)
    elimination on a denominator-cleared polynomial matrix.
    """

    def __init__(self, rows):
        self.rows = [[RatFunc.of(e) for e in row] for row in rows]
        self.n = len(self.rows)
        self.m = len(self.rows[0]) if self.rows else 0

    @staticmethod
    def identity(n):
        return RFMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return (self.n == other.n and self.m == other.m and
                all(self.rows[i][j] == other.rows[i][j]
                    for i in range(self.n) for j in range(self.m)))

    def __add__(self, other):
        return RFMatrix([[self.rows[i][j] + other.rows[i][j] for j in range(self.m)]
                         for i in range(self.n)])

    def __sub__(self, other):
        return RFMatrix([[self.rows[i][j] - other.rows[i][j] for j in range(self.m)]
                         for i in range(self.n)])

    def __mul__(self, other):
        if isinstance(other, RFMatrix):
            if self.m != other.n:
                raise ValueError("shape mismatch")
            return RFMatrix([[sum((self.rows[i][k] * other.rows[k][j]
                                   for k in range(self.m)), RatFunc.of(0))
                              for j in range(other.m)] for i in range(self.n)])
        return RFMatrix([[e * other for e in row] for row in self.rows])

    __rmul__ = __mul__

    def transpose(self):
        return RFMatrix([[self.rows[i][j] for i in range(self.n)] for j in range(self.m)])

    def _cleared(self):
        # multiply each row by its common denominator: returns (poly rows, row factors)
        rows, facs = [], []
        for row in self.rows:
            d = Poly.num(1)
            for e in row:
                d = d * e.den
            rows.append([e.num * d.divexact(e.den) for e in row])
            facs.append(d)
        return rows, facs

    def det(self):
        if self.n != self.m:
            raise ValueError("not square")
        rows, facs = self._cleared()
        d = bareiss_det(rows)
        f = Poly.num(1)
        for x in facs:
            f = f * x
        return RatFunc(d, f)

    def inverse(self):
        """Exact inverse; raises ValueError on singular input."""
        if self.n != self.m:
            raise ValueError("not square")
        rows, facs = self._cleared()
        adj, det = bareiss_adjugate(rows)
        if det.is_zero():
            raise ValueError("singular matrix")
        # self = diag(1/facs) * rows, so inverse = rows^-1 * diag(facs)
        out = [[RatFunc(adj[i][j] * facs[j], det) for j in range(self.n)]
               for i in range(self.n)]
        return RFMatrix(out)


def bareiss_det(rows):
    """Determinant of a square Poly matrix by fraction-free elimination."""
    n = len(rows)
    M = [list(r) for r in rows]
    sign = 1
    prev = Poly.num(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev)
            M[i][k] = Poly()
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def bareiss_adjugate(rows):
    """(adjugate-like matrix W, det) with rows^-1 = W / det, by fraction-free
    Gauss-Jordan (Montante) elimination on [rows | I]."""
    n = len(rows)
    M = [list(r) + [Poly.num(1) if i == j else Poly() for j in range(n)]
         for i, r in enumerate(rows)]
    sign = 1
    prev = Poly.num(1)
    for k in range(n):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return None, Poly()
        for i in range(n):
            if i == k:
                continue
            for j in range(2 * n):
                if j == k:
                    continue
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev)
            M[i][k] = Poly()
        prev = M[k][k]
    det = prev if sign == 1 else -prev
    W = [[M[i][n + j] if sign == 1 else -M[i][n + j] for j in range(n)] for i in range(n)]
    return W, det
