"""Bundled exact data files: matrix generators, slice bases, flat
coordinates, potentials and dispersive tensors for the exceptional
algebras.

File format: '[section]' headers and 'key = value' lines; values are
either sparse matrix triplets 'i,j,num/den; ...' or expressions in
Python syntax over rational literals and named variables, parsed with
ast (no eval).  A 'checksum:' header pins each document.
"""

import ast
import hashlib
import os
from fractions import Fraction

from .algebra import Poly
from .liealg import mzero, MatrixLieAlgebra

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
ENV_VAR = 'DSCENTRAL_FIXTURE_DIR'
_override = None


def set_data_dir(path):
    """Explicit directory override; None keeps the environment or
    bundled default."""
    global _override
    _override = path


def data_dir():
    return _override or os.environ.get(ENV_VAR) or DATA_DIR


class FixtureError(Exception):
    pass


def _parse_fraction(s):
    s = s.strip()
    if '/' in s:
        a, b = s.split('/')
        return Fraction(int(a), int(b))
    return Fraction(int(s))


def parse_expr(text, varmap):
    """Expression over +,-,*,/,** with integer literals and names from
    varmap; division of constants is exact.  Returns Poly (or Fraction
    wrapped in Poly)."""
    try:
        tree = ast.parse(text.strip(), mode='eval')
    except SyntaxError as ex:
        raise FixtureError("bad expression: %s" % ex)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int):
                return Fraction(node.value)
            raise FixtureError("non-integer literal %r" % node.value)
        if isinstance(node, ast.Name):
            if node.id not in varmap:
                raise FixtureError("unknown name %r" % node.id)
            return varmap[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.UAdd):
            return ev(node.operand)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Pow):
                if not isinstance(b, Fraction) or b.denominator != 1:
                    raise FixtureError("bad exponent")
                return a ** int(b)
            if isinstance(node.op, ast.Div):
                if isinstance(b, Fraction):
                    if b == 0:
                        raise FixtureError("division by zero")
                    return a * (Fraction(1) / b)
                raise FixtureError("division by a non-constant")
        raise FixtureError("unsupported syntax %r" % node)

    return ev(tree)


def parse_triplets(text, size, scale=1):
    """'i,j,num/den; ...' -> dense Fraction matrix."""
    m = mzero(size)
    for part in text.split(';'):
        part = part.strip()
        if not part:
            continue
        i, j, c = part.split(',')
        m[int(i) - 1][int(j) - 1] += _parse_fraction(c) * scale
    return m


def load_document(name):
    """Parse data/<name>.txt into {'header': {...}, sections: {...}};
    verifies the stored checksum."""
    path = os.path.join(data_dir(), name + '.txt')
    if not os.path.exists(path):
        raise FixtureError("no fixture %r" % name)
    with open(path) as f:
        lines = f.read().splitlines()
    header = {}
    body_start = None
    for k, line in enumerate(lines):
        if line.startswith('['):
            body_start = k
            break
        if ':' in line:
            key, val = line.split(':', 1)
            header[key.strip()] = val.strip()
    if body_start is None:
        raise FixtureError("no sections in %r" % name)
    body = '\n'.join(lines[body_start:]) + '\n'
    digest = hashlib.sha256(body.encode()).hexdigest()
    if header.get('checksum') != digest:
        raise FixtureError("checksum mismatch in %r" % name)
    sections = {}
    cur = None
    for line in lines[body_start:]:
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('[') and line.endswith(']'):
            cur = line[1:-1]
            sections[cur] = {}
            continue
        if '=' not in line or cur is None:
            raise FixtureError("stray line %r" % line)
        key, val = line.split('=', 1)
        sections[cur][key.strip()] = val.strip()
    return {'header': header, 'sections': sections}


def _transpose(m):
    return [list(r) for r in zip(*m)]


def build_algebra(name):
    """MatrixLieAlgebra from a fixture document.  Y entries may be given
    as explicit triplets or as 'transpose' plus optional correction
    triplets."""
    doc = load_document(name)
    h = doc['header']
    size = int(h['rep_size'])
    dim = int(h['dim'])
    rank = int(h['rank'])
    scale = _parse_fraction(h['form_scale'])
    gens = doc['sections']['generators']
    X = [parse_triplets(gens['X%d' % i], size) for i in range(1, rank + 1)]
    Y = []
    for i in range(1, rank + 1):
        spec = gens['Y%d' % i]
        if spec.startswith('transpose'):
            m = _transpose(X[i - 1])
            rest = spec[len('transpose'):].strip()
            if rest:
                corr = parse_triplets(rest, size)
                m = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(m, corr)]
        else:
            m = parse_triplets(spec, size)
        Y.append(m)
    return MatrixLieAlgebra(h['algebra'], h['type'], rank, X, Y, scale, dim)


def _varmap_families(doc, n):
    vm = {}
    for i in range(1, n + 1):
        vm['u%d' % i] = Poly.of('u', i)
        vm['t%d' % i] = Poly.of('t', i)
    return vm


def load_frobenius(name):
    """Potential, Euler/unity fields and flat coordinate expressions."""
    doc = load_document(name)
    n = int(doc['header']['rank'])
    vm = _varmap_families(doc, n)
    sec = doc['sections']
    out = {'rank': n}
    if 'potential' in sec:
        out['F'] = parse_expr(sec['potential']['F'], vm)
    if 'euler' in sec:
        out['E'] = [parse_expr(sec['euler']['E%d' % i], vm)
                    for i in range(1, n + 1)]
        out['e'] = [parse_expr(sec['euler']['e%d' % i], vm)
                    for i in range(1, n + 1)]
    if 'flat_coords' in sec:
        out['t'] = [parse_expr(sec['flat_coords']['t%d' % i], vm)
                    for i in range(1, n + 1)]
    if 'tensors' in sec:
        tens = {}
        for key, val in sec['tensors'].items():
            tens[key] = parse_expr(val, vm)
        out['tensors'] = tens
    if 'ktensor' in sec:
        kt = {}
        for key, val in sec['ktensor'].items():
            # K_j^i stored as K<i>_<j>
            ij = key[1:].split('_')
            kt[(int(ij[0]), int(ij[1]))] = parse_expr(val, vm)
        out['K'] = kt
    return out


def load_gammas(name, alg):
    """Slice generators expressed over root vectors X_<n1n2...> and the
    simple generators X1..Xn."""
    doc = load_document(name)
    n = alg.n
    sec = doc['sections'].get('gamma')
    if sec is None:
        raise FixtureError("no gamma section in %r" % name)
    exprs = [sec['gamma%d' % i] for i in range(1, n + 1)]
    labels = set()
    for e in exprs:
        for node in ast.walk(ast.parse(e, mode='eval')):
            if isinstance(node, ast.Name):
                labels.add(node.id)
    vm = {}
    for lab in labels:
        if lab.startswith('X_'):
            nvec = [int(c) for c in lab[2:]]
            vm[lab] = alg.root_vector(nvec)
        elif lab.startswith('X'):
            vm[lab] = alg.X[int(lab[1:]) - 1]
        else:
            raise FixtureError("unknown gamma name %r" % lab)

    class MWrap:
        """Matrix wrapper so parse_expr arithmetic works on matrices."""

        def __init__(self, m):
            self.m = m

        def __add__(self, o):
            return MWrap([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.m, o.m)])

        def __sub__(self, o):
            return MWrap([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.m, o.m)])

        def __neg__(self):
            return MWrap([[-a for a in r] for r in self.m])

        def __mul__(self, o):
            if isinstance(o, Fraction):
                return MWrap([[a * o for a in r] for r in self.m])
            raise FixtureError("matrix product not allowed here")

        def __rmul__(self, o):
            return self.__mul__(o)

    wm = {k: MWrap(v) for k, v in vm.items()}
    out = []
    for e in exprs:
        v = parse_expr(e, wm)
        out.append(v.m if isinstance(v, MWrap) else v)
    return out


def fixture_invariants(name, tpoint):
    """Central invariants at a flat-coordinate point, from the stored
    potential (leading metrics) and the stored dispersive tensors A22_ij
    (A21 is the t1 derivative of A22).  Returns (roots, invariants)."""
    from . import frobenius
    from .dirac import central_invariants_dirac
    fx = load_frobenius(name)
    n = fx['rank']
    pen = frobenius.pencil_from_potential(fx['F'], fx['E'], fx['e'], n)
    A22 = [[None] * n for _ in range(n)]
    for key, val in fx.get('tensors', {}).items():
        if not key.startswith('A22_'):
            continue
        i, j = int(key[4]), int(key[5])
        p = val if isinstance(val, Poly) else Poly.num(val)
        A22[i - 1][j - 1] = A22[j - 1][i - 1] = p
    if any(x is None for row in A22 for x in row):
        raise FixtureError("incomplete A22 table in %r" % name)
    # the invariant engine works in the 'u' family
    ren = {('t', i, 0): Poly.of('u', i) for i in range(1, n + 1)}

    def r(p):
        p = p if isinstance(p, Poly) else Poly.num(p)
        return p.subs(ren)

    tensors = {
        'g2': [[r(pen['g2'][i][j]) for j in range(n)] for i in range(n)],
        'g1': [[r(pen['g1'][i][j]) for j in range(n)] for i in range(n)],
        'A22': [[r(A22[i][j]) for j in range(n)] for i in range(n)],
    }
    tensors['A21'] = [[tensors['A22'][i][j].diff(('u', 1, 0))
                       for j in range(n)] for i in range(n)]
    return central_invariants_dirac(tensors, n, list(tpoint))


def available():
    return sorted(f[:-4] for f in os.listdir(data_dir()) if f.endswith('.txt'))
