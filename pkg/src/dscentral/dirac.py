"""Reduction of the bihamiltonian structure to a transversal slice by
second class constraints, for exact matrix Lie algebra data.

All tensors are computed symbolically in the slice coordinates u^i and
an auxiliary shift parameter; the shift-linear parts are the level-one
tensors of the pencil.
"""

from fractions import Fraction

from .algebra import Poly, bareiss_det, bareiss_adjugate
from . import liealg
from .liealg import mzero, madd, mscale, mcomm, flatten, nullspace, rank


LAM = ('lam', 0, 0)


def slice_bases(alg, gammas=None):
    """The transversal slice data of a matrix Lie algebra.

    Returns a dict with keys 'gammas' (matrices spanning Ker ad I_+ by
    grade), 'gamma_ups' (dual basis in Ker ad I_-, <gamma^i, gamma_j> =
    delta), 'f' (basis of n + its dual complement inside h + n^-) and
    'exponents'.

    The gamma_i can be supplied explicitly to pin a normalization; the
    duals are always recomputed from the pairing.
    """
    n = alg.n
    if gammas is None:
        gk = alg.graded_kernel(alg.I_plus)
        gammas = []
        exps = sorted(g for g in gk if g > 0)
        for g in exps:
            for v in gk[g]:
                gammas.append(alg.from_coords(v))
    else:
        exps = []
        for g in gammas:
            c = alg.coords(g)
            grades = {alg.grades[i] for i, x in enumerate(c) if x}
            if len(grades) != 1:
                raise ValueError("gamma not graded")
            exps.append(grades.pop())
    if len(gammas) != n:
        raise ValueError("expected %d slice generators" % n)
    gkm = alg.graded_kernel(alg.I_minus)
    gups = []
    for g, gam in zip(exps, gammas):
        cand = gkm.get(-g, [])
        pick = None
        for v in cand:
            m = alg.from_coords(v)
            pr = alg.form(m, gam)
            if pr:
                if pick is not None:
                    raise ValueError("ambiguous dual generator at grade %s" % g)
                pick = mscale(m, 1 / pr)
        if pick is None:
            raise ValueError("no dual generator at grade %s" % g)
        gups.append(pick)
    for i, gu in enumerate(gups):
        for j, gam in enumerate(gammas):
            want = Fraction(1) if i == j else Fraction(0)
            if alg.form(gu, gam) != want:
                raise ValueError("dual basis pairing failed")
    # n = positive part of the graded basis
    npos = [b for b, g in zip(alg.basis, alg.grades) if g > 0]
    nonpos = [i for i, g in enumerate(alg.grades) if g <= 0]
    # complement: annihilator of the gamma_i inside h + n^-
    rows = [[alg.form(alg.basis[k], gam) for k in nonpos] for gam in gammas]
    ann = nullspace(rows)
    ndual = []
    for v in ann:
        c = [Fraction(0)] * alg.dim
        for k, x in zip(nonpos, v):
            c[k] = x
        ndual.append(alg.from_coords(c))
    if len(npos) != len(ndual):
        raise ValueError("slice complement has wrong dimension")
    return {'gammas': gammas, 'gamma_ups': gups, 'f': npos + ndual,
            'exponents': exps}


def _affine(alg, const_m, gammas, alpha, probe):
    """Poly  <const + sum u_i gamma_i + lam alpha, probe>  for a fixed
    probe matrix."""
    out = Poly.num(alg.form(const_m, probe)) if const_m is not None else Poly()
    for i, gam in enumerate(gammas):
        c = alg.form(gam, probe)
        if c:
            out = out + Poly.of('u', i + 1) * c
    c = alg.form(alpha, probe)
    if c:
        out = out + Poly({((LAM, 1),): Fraction(1)}) * c
    return out


def dirac_tensors(alg, slices=None):
    """Contravariant tensors of the reduced pencil in the coordinates
    u^i = <gamma^i, q>.

    Returns a dict of n x n Poly matrices: 'g2', 'g1', 'A12', 'A11',
    'A22', 'A21' (second index = shift level), entries polynomial in
    the u^i.
    """
    if slices is None:
        slices = slice_bases(alg)
    gammas, gups, fs = slices['gammas'], slices['gamma_ups'], slices['f']
    n = alg.n
    m2 = len(fs)
    alpha = gammas[-1]

    # P(u, lam) and the constant Q
    P = [[Poly() for _ in range(m2)] for _ in range(m2)]
    Q = [[Poly.num(alg.form(fa, fb)) for fb in fs] for fa in fs]
    for a in range(m2):
        for b in range(a + 1, m2):
            br = mcomm(fs[a], fs[b])
            pol = -_affine(alg, alg.I_minus, gammas, alpha, br)
            P[a][b] = pol
            P[b][a] = -pol
    # R(u, lam) and the constant S, n x 2m
    R = [[Poly() for _ in range(m2)] for _ in range(n)]
    S = [[Poly.num(alg.form(gu, fa)) for fa in fs] for gu in gups]
    for i in range(n):
        for a in range(m2):
            br = mcomm(gups[i], fs[a])
            R[i][a] = -_affine(alg, None, gammas, alpha, br)

    adj, det = bareiss_adjugate(P)
    if det.is_zero():
        raise ValueError("degenerate constraint matrix")

    def pm(A, B):
        return [[sum((A[i][t] * B[t][j] for t in range(len(B))), Poly())
                 for j in range(len(B[0]))] for i in range(len(A))]

    def pt(A):
        return [list(r) for r in zip(*A)]

    Rt, St = pt(R), pt(S)
    r0 = pm(R, adj)              # R P^-1 * det
    s0 = pm(S, adj)
    QA = pm(Q, adj)
    r1 = pm(r0, QA)              # R P^-1 Q P^-1 * det^2
    s1 = pm(s0, QA)
    s2 = pm(s1, QA)
    r2 = pm(r1, QA)
    r3 = pm(r2, QA)

    def combine(terms, power):
        """terms: list of (num matrix, det-power deficit); divide the
        total by det**power exactly."""
        out = [[Poly() for _ in range(n)] for _ in range(n)]
        for M, d in terms:
            f = det ** d
            for i in range(n):
                for j in range(n):
                    out[i][j] = out[i][j] + M[i][j] * f
        dp = det ** power
        return [[e.divexact(dp) if not e.is_zero() else e for e in row]
                for row in out]

    # signs fixed by expanding -(1/eps) N M^-1 N+ with M = P + Q eps d,
    # N = R + S eps d at constant coefficients
    G2 = combine([(pm(r1, Rt), 0), (mneg(pm(s0, Rt)), 1), (pm(r0, St), 1)], 2)
    T12 = combine([(mneg(pm(r2, Rt)), 0), (pm(r1, St), 1),
                   (mneg(pm(s1, Rt)), 1), (pm(s0, St), 2)], 3)
    T22 = combine([(pm(r3, Rt), 0), (pm(r2, St), 1),
                   (mneg(pm(s2, Rt)), 1), (mneg(pm(s1, St)), 2)], 4)

    def split(M, linear_only=True):
        a0 = [[Poly() for _ in range(n)] for _ in range(n)]
        a1 = [[Poly() for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                parts = M[i][j].coeffs_in(LAM)
                for e, pol in parts.items():
                    if e == 0:
                        a0[i][j] = pol
                    elif e == 1:
                        a1[i][j] = pol
                    elif linear_only and not pol.is_zero():
                        raise ValueError("shift dependence not linear")
        return a0, a1

    g2, g1 = split(G2)
    A12, A11 = split(T12)
    A22, A21 = split(T22)
    return {'g2': g2, 'g1': g1, 'A12': A12, 'A11': A11,
            'A22': A22, 'A21': A21}


def mneg(A):
    return [[-e for e in row] for row in A]


def char_poly(tensors, n):
    """p(z; u) = det(g2 - z g1) as a Poly in z and the u^i."""
    z = Poly.of('z')
    M = [[tensors['g2'][i][j] - z * tensors['g1'][i][j] for j in range(n)]
         for i in range(n)]
    return bareiss_det(M)


def central_invariants_dirac(tensors, n, upoint):
    """Evaluate the defect formula of the reduced pencil at a point with
    rational canonical coordinates.

    upoint: values of u^1..u^n.  Returns (roots, invariants).
    """
    from .invariants import _rational_roots, DegeneratePoint
    usub = {('u', i + 1, 0): Fraction(v) for i, v in enumerate(upoint)}
    p = char_poly(tensors, n)
    dp = [p.diff(('u', k + 1, 0)).subs(usub) for k in range(n)]
    p0 = p.subs(usub)
    pz = p0.diff(('z', 0, 0))
    cz = {e: c.constant() for e, c in p0.coeffs_in(('z', 0, 0)).items()}
    roots = _rational_roots(cz)
    if roots is None:
        raise DegeneratePoint("irrational canonical coordinates")
    roots = sorted(roots)

    def at(pol, z):
        return sum((c.constant() * z ** e
                    for e, c in pol.coeffs_in(('z', 0, 0)).items()), Fraction(0))

    g1 = [[tensors['g1'][i][j].subs(usub).constant() for j in range(n)]
          for i in range(n)]
    A22 = [[tensors['A22'][i][j].subs(usub).constant() for j in range(n)]
           for i in range(n)]
    A21 = [[tensors['A21'][i][j].subs(usub).constant() for j in range(n)]
           for i in range(n)]
    out = []
    for z in roots:
        d = [at(x, z) for x in dp]
        num = sum(d[k] * d[l] * (A22[k][l] - z * A21[k][l])
                  for k in range(n) for l in range(n))
        den = sum(d[k] * d[l] * g1[k][l] for k in range(n) for l in range(n))
        if den == 0:
            raise DegeneratePoint("degenerate first metric direction")
        out.append(Fraction(1, 3) * at(pz, z) ** 2 * num / den ** 2)
    return roots, out


def _tensors_at(alg, slices, qshift, qfull):
    """The three second-bracket blocks as Fraction matrices at a single
    point: qfull = I_- + q, qshift = q (both matrices)."""
    gups, fs = slices['gamma_ups'], slices['f']
    n, m2 = alg.n, len(fs)
    P = [[Fraction(0)] * m2 for _ in range(m2)]
    Q = [[alg.form(fa, fb) for fb in fs] for fa in fs]
    for a in range(m2):
        for b in range(a + 1, m2):
            v = -alg.form(qfull, mcomm(fs[a], fs[b]))
            P[a][b] = v
            P[b][a] = -v
    R = [[-alg.form(qshift, mcomm(gu, fa)) for fa in fs] for gu in gups]
    S = [[alg.form(gu, fa) for fa in fs] for gu in gups]
    aug = liealg.rref([list(r) + [Fraction(1) if i == j else Fraction(0)
                                  for j in range(m2)]
                       for i, r in enumerate(P)])[0]
    if any(aug[i][i] != 1 for i in range(m2)):
        raise ValueError("degenerate constraint matrix at this point")
    Pinv = [row[m2:] for row in aug]
    mm, mt = liealg.mmul, lambda A: [list(r) for r in zip(*A)]
    Rt, St = mt(R), mt(S)
    r0 = mm(R, Pinv)
    s0 = mm(S, Pinv)
    QP = mm(Q, Pinv)
    r1 = mm(r0, QP)
    s1 = mm(s0, QP)
    s2 = mm(s1, QP)
    r2 = mm(r1, QP)
    r3 = mm(r2, QP)
    add, neg = liealg.madd, lambda A: liealg.mscale(A, -1)
    G2 = add(mm(r1, Rt), add(neg(mm(s0, Rt)), mm(r0, St)))
    T12 = add(neg(mm(r2, Rt)), add(mm(r1, St),
              add(neg(mm(s1, Rt)), mm(s0, St))))
    T22 = add(mm(r3, Rt), add(mm(r2, St),
              add(neg(mm(s2, Rt)), neg(mm(s1, St)))))
    return G2, T12, T22


def numeric_pencil(alg, slices, upoint):
    """All six reduced tensors as Fraction matrices at one slice point,
    via evaluations at three values of the shift parameter."""
    gammas = slices['gammas']
    alpha = gammas[-1]
    vals = {}
    for lam in (0, 1, 2):
        q = liealg.mzero(len(alpha))
        for u, gam in zip(upoint, gammas):
            q = madd(q, gam, Fraction(u))
        q = madd(q, alpha, Fraction(lam))
        vals[lam] = _tensors_at(alg, slices, q, madd(q, alg.I_minus, 1))
    out = {}
    for idx, (k2, k1) in enumerate((('g2', 'g1'), ('A12', 'A11'),
                                    ('A22', 'A21'))):
        a0 = vals[0][idx]
        a1 = madd(vals[1][idx], a0, -1)
        chk = madd(madd(vals[2][idx], a0, -1), a1, -2)
        if any(x for row in chk for x in row):
            raise ValueError("shift dependence not linear at this point")
        out[k2] = a0
        out[k1] = a1
    return out


def g2_slice(alg):
    """The transversal slice of the rank 2 algebra with the historical
    normalization of the grade 1 and grade 5 generators."""
    Xt, _ = liealg.chevalley_tower_g2(alg)
    g1 = madd(mscale(alg.X[0], Fraction(3, 5)), alg.X[1])
    g2 = Xt[-1]
    return slice_bases(alg, [g1, g2])
