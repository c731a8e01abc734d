"""Canonical coordinates and central invariants of the scalar-Lax
bihamiltonian pencils.

The pencil is diagonalized at the critical points of the symbol; the
delta'', delta''' blocks of the bracket tables, contracted with the
Jacobian of the critical values, feed the defect formula

    c_i = ( Q2_ii - lam_i Q1_ii
            + sum_{k != i} (P2_ki - lam_i P1_ki)^2 / (f_k (lam_k - lam_i)) )
          / (3 f_i^2).
"""

from fractions import Fraction

from .algebra import Poly
from .brackets import bracket_table, small_power
from .lax import NU, u_list, lambda_xpoly, capital_lambda, capital_lambda_tilde
from . import liealg


class DegeneratePoint(Exception):
    """The symbol has coinciding or otherwise unusable critical data."""


def _poly_coeffs(p, vname):
    """Laurent Poly in a single variable -> dict power -> Fraction."""
    out = {}
    for e, c in p.coeffs_in((vname, 0, 0)).items():
        out[e] = c.constant()
    return out


def _eval1(coeffs, x):
    return sum((c * x ** e for e, c in coeffs.items()), Fraction(0))


def critical_polynomial(series, n, u):
    """The polynomial whose roots are the finite critical points: lam'
    for A (variable p); Lam' for B, C; P Lam' - Lam for D (variable P)."""
    u = u_list(series, n, u)
    if series == 'A':
        lam = lambda_xpoly(series, n, u, 'p')
        return lam.diff(('p', 0, 0))
    L = capital_lambda(n, u, 'P')
    dL = L.diff(('P', 0, 0))
    if series in ('B', 'C'):
        return dL
    return Poly.of('P') * dL - L


def _rational_roots(coeffs):
    """All roots of a rational-coefficient polynomial if they are all
    rational, else None.  coeffs: dict power -> Fraction."""
    import sympy
    x = sympy.Symbol('x')
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** e
               for e, c in coeffs.items())
    roots = sympy.roots(sympy.Poly(expr, x))
    deg = max(coeffs)
    tot = 0
    out = []
    for r, mult in roots.items():
        if not r.is_rational:
            return None
        if mult > 1:
            raise DegeneratePoint("repeated critical point")
        out.append(Fraction(int(r.p), int(r.q)))
        tot += mult
    return out if tot == deg else None


def _numeric_roots(coeffs):
    import mpmath
    deg = max(coeffs)
    cl = [complex(coeffs.get(e, Fraction(0))) for e in range(deg, -1, -1)]
    return [complex(r) for r in mpmath.polyroots(cl, maxsteps=200, extraprec=80)]


def canonical_coordinates(series, n, u):
    """Critical points and values of the symbol: list of (r, lam).

    A: lam at the roots of lam'; B, C: Lam at the roots of Lam' (in the
    capital variable) plus the distinguished pair (0, Lam(0)) in the last
    slot; D: Lam~ = Lam/P at the roots of P Lam' - Lam.

    Results are exact Fractions whenever all critical points are
    rational, floats otherwise.
    """
    u = u_list(series, n, u)
    cp = _poly_coeffs(critical_polynomial(series, n, u), 'p' if series == 'A' else 'P')
    roots = _rational_roots(cp)
    if roots is None:
        roots = _numeric_roots(cp)
        roots = [r.real if abs(r.imag) < 1e-12 else r for r in roots]
    exact = all(isinstance(r, Fraction) for r in roots)
    if series == 'A':
        lam = _poly_coeffs(lambda_xpoly(series, n, u, 'p'), 'p')
        pts = sorted(((r, _eval1(lam, r)) for r in roots),
                     key=lambda t: (t[0].real, t[0].imag) if not exact else t)
    else:
        Lam = _poly_coeffs(capital_lambda(n, u, 'P'), 'P')
        if series == 'D':
            if not u[0].constant():
                raise DegeneratePoint("u_1 = 0 for the D series")
            if any((abs(r) < 1e-12 if not isinstance(r, Fraction) else r == 0)
                   for r in roots):
                raise DegeneratePoint("critical point at the origin")
            pts = sorted(((r, _eval1(Lam, r) / r) for r in roots),
                         key=lambda t: (t[0].real, t[0].imag) if not exact else t)
        else:
            pts = sorted(((r, _eval1(Lam, r)) for r in roots),
                         key=lambda t: (t[0].real, t[0].imag) if not exact else t)
            pts.append((Fraction(0), _eval1(Lam, Fraction(0))))
    if len(pts) != n:
        raise DegeneratePoint("expected %d critical points, got %d" % (n, len(pts)))
    vals = [lam for _, lam in pts]
    for i in range(n):
        for j in range(i + 1, n):
            d = vals[i] - vals[j]
            if (d == 0) if exact else (abs(d) < 1e-10):
                raise DegeneratePoint("coinciding critical values")
    return pts


def _eval_table(table, series, s, x, y):
    capital = series != 'A'
    tot = Fraction(0) if isinstance(x, Fraction) and isinstance(y, Fraction) else 0.0
    for (i, j, t), pol in table.items():
        if t != s:
            continue
        c = pol.constant()
        if capital:
            tot += c * x ** (i - 1) * y ** (j - 1)
        else:
            tot += c * x ** small_power(series, i) * y ** small_power(series, j)
    return tot


def central_invariants(series, n, u, K=4, tables=None):
    """Full evaluation chain at a single point of the orbit space.

    Returns a dict with canonical points, the diagonal metric entries f,
    the contracted delta''/delta''' blocks P, Q and the invariants c.
    """
    u = u_list(series, n, u)
    pts = canonical_coordinates(series, n, u)
    if tables is None:
        tables = (bracket_table(series, n, 1, u, K),
                  bracket_table(series, n, 2, u, K))
    t1, t2 = tables
    rs = [r for r, _ in pts]
    lams = [l for _, l in pts]

    def E(a, s, k, i):
        t = t1 if a == 1 else t2
        v = _eval_table(t, series, s, rs[k], rs[i])
        if series == 'D':
            v = v / (rs[k] * rs[i])
        return v

    exact = all(isinstance(r, Fraction) for r in rs)

    def zero(v):
        return v == 0 if exact else abs(v) < 1e-9 * (1 + max(abs(x) for x in f + [1]))

    f = []
    for i in range(n):
        for k in range(n):
            v = E(1, 1, k, i)
            if k != i and not zero(v):
                raise DegeneratePoint("first metric not diagonal")
            if k == i:
                f.append(v)
        if not zero(E(2, 1, i, i) - lams[i] * f[i]):
            raise DegeneratePoint("second metric not lam * first")
    if any(zero(x) for x in f):
        raise DegeneratePoint("vanishing diagonal metric entry")
    P1 = {(k, i): E(1, 2, k, i) for k in range(n) for i in range(n)}
    P2 = {(k, i): E(2, 2, k, i) for k in range(n) for i in range(n)}
    Q1 = [E(1, 3, i, i) for i in range(n)]
    Q2 = [E(2, 3, i, i) for i in range(n)]
    cs = []
    for i in range(n):
        acc = Q2[i] - lams[i] * Q1[i]
        for k in range(n):
            if k == i:
                continue
            num = (P2[(k, i)] - lams[i] * P1[(k, i)]) ** 2
            acc += num / (f[k] * (lams[k] - lams[i]))
        cs.append(acc / (3 * f[i] ** 2))
    return {'points': pts, 'lambdas': lams, 'f': f, 'P1': P1, 'P2': P2,
            'Q1': Q1, 'Q2': Q2, 'c': cs}


def residue_identity(rs):
    """For lam with lam' = (n+1) prod (p - r_k):  the sums

        sum_{k != i} (lam(r_k) - lam(r_i)) / (lam''(r_k) (r_k - r_i)^2)

    for each i (all equal to (1-n)/(2(n+1)))."""
    n = len(rs)
    lamp = Poly.num(n + 1)
    for r in rs:
        lamp = lamp * (Poly.of('p') - r)
    cp = _poly_coeffs(lamp, 'p')
    lam = {e + 1: c / (e + 1) for e, c in cp.items()}
    lam2 = {e - 1: c * e for e, c in cp.items() if e >= 1}
    out = []
    for i, ri in enumerate(rs):
        s = Fraction(0)
        for k, rk in enumerate(rs):
            if k == i:
                continue
            s += (_eval1(lam, rk) - _eval1(lam, ri)) / (_eval1(lam2, rk) * (rk - ri) ** 2)
        out.append(s)
    return out


def transform_invariants(lams, cs, kappa):
    """Projective reparametrization of the pencil:

        lam -> (k21 + lam k22) / (k11 + lam k12),
        c   -> (k11 + k12 lam) c / det(kappa).
    """
    (k11, k12), (k21, k22) = kappa
    det = k11 * k22 - k12 * k21
    if det == 0:
        raise ValueError("singular pencil transformation")
    newl, newc = [], []
    for lam, c in zip(lams, cs):
        den = k11 + lam * k12
        if den == 0:
            raise DegeneratePoint("pencil parameter at infinity")
        newl.append((k21 + lam * k22) / den)
        newc.append(den * c / det)
    return newl, newc


def lie_formula(typ, n):
    """Central invariants from the coroot norms, in the normalized
    bilinear form; the vertex labeling is the one of liealg.cartan_matrix."""
    return liealg.lie_central_invariants(typ, n)


def series_scale(series):
    """Multiply the normalized-form values by this factor to get the
    values of the scalar-Lax computation (which uses the trace form on
    the defining representation)."""
    return 1 / liealg.defining_form_ratio(series)


def folding_check():
    """Foldings of simply laced diagrams versus the direct values."""
    out = {}
    out[('B', 4)] = (lie_formula('B', 4), liealg.fold('B', 4))
    out[('C', 4)] = (lie_formula('C', 4), liealg.fold('C', 4))
    out[('F', 4)] = (lie_formula('F', 4), liealg.fold('F', 4))
    out[('G', 2, 'B3')] = (lie_formula('G', 2), liealg.fold('G', 3))
    out[('G', 2, 'D4')] = (lie_formula('G', 2), liealg.fold('G', 4))
    return out


# ---------------------------------------------------------------------------
# exact sample construction

def sample_from_roots(series, n, roots, c0=0, u2=1):
    """Build exact coordinates whose critical points are the given
    rationals.

    A: roots of lam' (must sum to zero); B, C: roots of Lam' (n-1 of
    them, nonzero), c0 = Lam(0); D: n-1 seed values, the n-th critical
    point is forced by the constraint that P Lam' - Lam has no linear
    term, u2 is free.
    """
    roots = [Fraction(r) for r in roots]
    if series == 'A':
        if len(roots) != n or sum(roots) != 0:
            raise ValueError("need n roots summing to zero")
        lamp = Poly.num(n + 1)
        for r in roots:
            lamp = lamp * (Poly.of('p') - r)
        cp = _poly_coeffs(lamp, 'p')
        lam = {e + 1: c / (e + 1) for e, c in cp.items()}
        lam[0] = Fraction(c0)
        return [lam.get(i - 1, Fraction(0)) for i in range(1, n + 1)]
    if series in ('B', 'C'):
        if len(roots) != n - 1 or any(r == 0 for r in roots):
            raise ValueError("need n-1 nonzero roots")
        dL = Poly.num(n)
        for r in roots:
            dL = dL * (Poly.of('P') - r)
        cp = _poly_coeffs(dL, 'P')
        Lam = {e + 1: c / (e + 1) for e, c in cp.items()}
        Lam[0] = Fraction(c0)
        return [Lam.get(i - 1, Fraction(0)) for i in range(1, n + 1)]
    if series == 'D':
        if len(roots) != n - 1 or any(r == 0 for r in roots):
            raise ValueError("need n-1 nonzero seed roots")
        e1 = sum(roots)
        # elementary symmetric values of the seeds
        es = [Fraction(1)] + [Fraction(0)] * (n - 1)
        for r in roots:
            for k in range(n - 1, 0, -1):
                es[k] += es[k - 1] * r
        if es[n - 2] == 0:
            raise DegeneratePoint("cannot complete the critical set")
        last = -es[n - 1] / es[n - 2]
        if last == 0 or last in roots:
            raise DegeneratePoint("degenerate completed critical set")
        full = roots + [last]
        N = Poly.num(n - 1)
        for r in full:
            N = N * (Poly.of('P') - r)
        cn = _poly_coeffs(N, 'P')
        if cn.get(1, Fraction(0)) != 0:
            raise DegeneratePoint("linear term did not cancel")
        u = [Fraction(0)] * n
        for i in range(1, n + 1):
            if i == 2:
                u[1] = Fraction(u2)
            else:
                u[i - 1] = cn.get(i - 1, Fraction(0)) / (i - 2)
        return u
    raise ValueError("unknown series %r" % series)


def random_sample(series, n, rng, spread=12):
    """Exact coordinates with rational canonical data, for property
    tests; retries until nondegenerate."""
    for _ in range(200):
        try:
            if series == 'A':
                pool = rng.sample(range(-spread, spread + 1), n)
                pool[-1] = -sum(pool[:-1])
                if len(set(pool)) != n:
                    continue
                u = sample_from_roots(series, n, pool, c0=rng.randint(-5, 5))
            elif series in ('B', 'C'):
                pool = [x for x in rng.sample(range(-spread, spread + 1), n - 1) if x]
                if len(pool) != n - 1:
                    continue
                u = sample_from_roots(series, n, pool, c0=rng.randint(-5, 5))
            else:
                pool = [x for x in rng.sample(range(-spread, spread + 1), n - 1) if x]
                if len(pool) != n - 1:
                    continue
                u = sample_from_roots(series, n, pool, u2=rng.randint(-5, 5))
            canonical_coordinates(series, n, u)
            return u
        except (DegeneratePoint, ValueError):
            continue
    raise DegeneratePoint("could not draw a nondegenerate sample")
