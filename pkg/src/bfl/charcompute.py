"""Brute-force character tables for small fully-enumerable groups.

Structure constants are counted from explicit class-sum products.  The
irreducible characters are the common eigenvectors of the class matrices,
computed exactly over a prime field F_ell with ell = 1 (mod exponent) and
ell > 2|G|, then lifted to cyclotomic integers by Fourier inversion on the
eigenvalue multiplicities of each power class.
"""

import math

from .classes import enumerate_classes, serial_key
from .chartab import CharacterTable
from .cyclotomic import Cyclotomic

# shipped table name -> catalog blueprint
SHIPPED_TABLES = (
    ("a5", "alt:5"),
    ("s5", "sym:5"),
    ("a6", "alt:6"),
    ("s6", "sym:6"),
    ("pgl2_9", "psl2:9:diag"),
    ("m10", "psl2:9:diagfrob"),
    ("l2_7", "psl2:7"),
    ("l2_8", "psl2:8"),
    ("l2_11", "psl2:11"),
)


def structure_constants(G):
    """(classes, loc, a) with a[i][j][k] = #{(c,d) in C_i x C_j : cd = e_k}.

    e_k is any fixed element of C_k; only one representative c per C_i is
    scanned, since conjugating d by the element carrying rep to c is a
    bijection of the solution set.
    """
    cls = enumerate_classes(G)
    loc = {}
    for k, C in enumerate(cls):
        for x in C.elements:
            loc[serial_key(x)] = k
    r = len(cls)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        rep = cls[i].representative
        for j in range(r):
            hits = [0] * r
            for d in cls[j].elements:
                hits[loc[serial_key(rep * d)]] += 1
            for k in range(r):
                total = cls[i].size * hits[k]
                if total % cls[k].size:
                    raise AssertionError("class-sum count not divisible")
                a[i][j][k] = total // cls[k].size
    return cls, loc, a


# -- modular linear algebra -------------------------------------------------

def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _working_prime(order, exponent):
    """Smallest prime ell = 1 (mod exponent) with ell > 2*order."""
    k = (2 * order) // exponent + 1
    while not _is_prime(k * exponent + 1):
        k += 1
    return k * exponent + 1


def _primitive_root(ell):
    fac = []
    n, f = ell - 1, 2
    while f * f <= n:
        if n % f == 0:
            fac.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        fac.append(n)
    g = 2
    while any(pow(g, (ell - 1) // p, ell) == 1 for p in fac):
        g += 1
    return g


def _charpoly(M, ell):
    """Coefficients c_0..c_r of det(xI - M) mod ell (Faddeev-LeVerrier)."""
    r = len(M)
    coeffs = [0] * (r + 1)
    coeffs[r] = 1
    A = [row[:] for row in M]
    for k in range(1, r + 1):
        tr = sum(A[t][t] for t in range(r)) % ell
        c = (-tr * pow(k, -1, ell)) % ell
        coeffs[r - k] = c
        if k == r:
            break
        for t in range(r):
            A[t][t] = (A[t][t] + c) % ell
        A = [[sum(M[s][u] * A[u][t] for u in range(r)) % ell
              for t in range(r)] for s in range(r)]
    return coeffs

def _poly_roots(coeffs, ell):
    """All roots in F_ell, by direct scan (ell is a few thousand at most)."""
    roots = []
    for x in range(ell):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % ell
        if acc == 0:
            roots.append(x)
    return roots


def _nullspace(cols, ell):
    """Basis of {u : sum_t u_t cols[t] = 0} over F_ell, echelon order."""
    ncols = len(cols)
    nrows = len(cols[0]) if cols else 0
    A = [[cols[t][s] for t in range(ncols)] for s in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((s for s in range(row, nrows) if A[s][col]), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = pow(A[row][col], -1, ell)
        A[row] = [(v * inv) % ell for v in A[row]]
        for s in range(nrows):
            if s != row and A[s][col]:
                f = A[s][col]
                A[s] = [(A[s][t] - f * A[row][t]) % ell for t in range(ncols)]
        pivots.append(col)
        row += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        u = [0] * ncols
        u[free] = 1
        for s, col in enumerate(pivots):
            u[col] = (-A[s][free]) % ell
        basis.append(u)
    return basis


def _eigen_split(class_mats, ell):
    """Common eigenvectors (up to scale) of the commuting class matrices."""
    r = len(class_mats[0])
    blocks = [[[1 if t == s else 0 for t in range(r)] for s in range(r)]]
    for M in class_mats:
        if all(len(B) == 1 for B in blocks):
            break
        roots = _poly_roots(_charpoly(M, ell), ell)
        refined = []
        for B in blocks:
            if len(B) == 1:
                refined.append(B)
                continue
            found = 0
            for lam in roots:
                cols = []
                for b in B:
                    Mb = [sum(M[s][t] * b[t] for t in range(r)) % ell
                          for s in range(r)]
                    cols.append([(Mb[s] - lam * b[s]) % ell for s in range(r)])
                piece = []
                for u in _nullspace(cols, ell):
                    piece.append([sum(u[t] * B[t][s] for t in range(len(B)))
                                  % ell for s in range(r)])
                if piece:
                    refined.append(piece)
                    found += len(piece)
            if found != len(B):
                raise AssertionError("eigen split lost dimensions")
        blocks = refined
    if not all(len(B) == 1 for B in blocks):
        raise AssertionError("class matrices failed to separate characters")
    return [B[0] for B in blocks]


# -- table assembly ---------------------------------------------------------

def build_table(G, name, check=True):
    """Compute the full character table of an enumerable group."""
    cls, loc, a = structure_constants(G)
    r = len(cls)
    sizes = [C.size for C in cls]
    orders = [C.order for C in cls]
    exponent = math.lcm(*orders)
    grp_order = sum(sizes)
    ell = _working_prime(grp_order, exponent)
    g0 = _primitive_root(ell)

    # powers of each representative, as class indices
    powcls = []
    for C in cls:
        idx, y = [], G.identity
        for _ in range(C.order):
            idx.append(loc[serial_key(y)])
            y = y * C.representative
        powcls.append(idx)
    inv_idx = [powcls[k][-1] if cls[k].order > 1 else 0 for k in range(r)]

    class_mats = [[[a[i][j][k] % ell for k in range(r)] for j in range(r)]
                  for i in range(1, r)]
    rows = []
    for w in _eigen_split(class_mats, ell):
        if w[0] == 0:
            raise AssertionError("central character vanishes on the identity")
        scale = pow(w[0], -1, ell)
        w = [(v * scale) % ell for v in w]
        s = sum(w[k] * w[inv_idx[k]] * pow(sizes[k], -1, ell)
                for k in range(r)) % ell
        d2 = (grp_order * pow(s, -1, ell)) % ell
        d = math.isqrt(d2)
        if d * d != d2:
            raise AssertionError("degree squared %d is not a square" % d2)
        chi = [(d * w[k] * pow(sizes[k], -1, ell)) % ell for k in range(r)]
        values = []
        for k in range(r):
            o = orders[k]
            z = pow(g0, (ell - 1) // o, ell)
            inv_o = pow(o, -1, ell)
            mu = []
            for t in range(o):
                m = sum(chi[powcls[k][s_]] * pow(z, (-s_ * t) % (ell - 1), ell)
                        for s_ in range(o)) * inv_o % ell
                if m > d:
                    raise AssertionError("eigenvalue multiplicity %d out of "
                                         "range for degree %d" % (m, d))
                mu.append(m)
            if sum(mu) != d:
                raise AssertionError("multiplicities do not sum to the degree")
            values.append(Cyclotomic(o, mu).normalized())
        rows.append(values)
    rows.sort(key=lambda row: (row[0].as_int(), [v.key() for v in row]))

    classes = []
    primes = sorted({p for p in range(2, grp_order + 1)
                     if grp_order % p == 0 and _is_prime(p)})
    for k, C in enumerate(cls):
        pm = {p: powcls[k][p % C.order] for p in primes}
        classes.append({"size": C.size, "element_order": C.order,
                        "powermap": pm})

    T = CharacterTable(name, grp_order, classes, rows)
    if check:
        _cross_check(T, a)
    return T


def _cross_check(T, a):
    """Every structure constant from the table must match the counted one."""
    from .chartab import class_mult_count
    r = T.n_classes
    for i in range(r):
        for j in range(r):
            for k in range(r):
                got = class_mult_count(T, i, j, k)
                if got != a[i][j][k]:
                    raise AssertionError(
                        "%s: table gives %d for (%d,%d,%d), counting gives %d"
                        % (T.name, got, i, j, k, a[i][j][k]))


def table_json(G, name, check=True):
    return build_table(G, name, check=check).to_json()
