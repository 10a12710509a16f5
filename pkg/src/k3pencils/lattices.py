"""Integral lattice algebra for curve-intersection bookkeeping.

Gram matrices come from graphs of rational curves (self-intersection -2
unless a cover changed it, edge multiplicity = intersection number).
All arithmetic is exact: Bareiss elimination for determinants, integer
Smith and Hermite normal forms for discriminant groups and overlattice
gluing.
"""


class CurveGraph:
    """Named curves with self-intersections and meeting multiplicities."""

    def __init__(self):
        self.curves = {}
        self.edges = {}

    def add_curve(self, name, self_intersection=-2):
        if name in self.curves:
            raise ValueError("curve %r declared twice" % (name,))
        self.curves[name] = int(self_intersection)

    def add_edge(self, a, b, mult=1):
        if a == b:
            raise ValueError("curve %r cannot meet itself" % (a,))
        for name in (a, b):
            if name not in self.curves:
                raise ValueError("unknown curve %r" % (name,))
        if mult < 1:
            raise ValueError("multiplicity must be positive")
        key = frozenset((a, b))
        self.edges[key] = self.edges.get(key, 0) + int(mult)

    def names(self):
        return tuple(self.curves)


class IntegralLattice:
    """A symmetric integer Gram matrix with named basis vectors."""

    __slots__ = ("gram", "basis_names")

    def __init__(self, gram, basis_names=None):
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(gram)
        for row in gram:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if basis_names is None:
            basis_names = tuple("e%d" % (i + 1) for i in range(n))
        basis_names = tuple(basis_names)
        if len(basis_names) != n:
            raise ValueError("need one name per basis vector")
        self.gram = gram
        self.basis_names = basis_names

    @property
    def rank(self):
        return len(self.gram)

    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def index_of(self, name):
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise ValueError("unknown curve %r" % (name,))

    def __repr__(self):
        return "IntegralLattice(rank=%d, disc=%d)" % (
            self.rank, discriminant(self))


class DivisorClass:
    """An integer coefficient vector in the basis of a lattice."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs)

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "DivisorClass(%r)" % (self.coeffs,)


def divisor_class(l, mapping):
    """Build a class from {curve name: coefficient} over lattice l."""
    coeffs = [0] * l.rank
    for name, c in mapping.items():
        coeffs[l.index_of(name)] += c
    return DivisorClass(coeffs)


class DiscriminantGroup:
    """Invariant factors d1 | d2 | ... of a nondegenerate Gram matrix."""

    __slots__ = ("invariant_factors",)

    def __init__(self, invariant_factors):
        factors = tuple(int(d) for d in invariant_factors)
        for d in factors:
            if d <= 1:
                raise ValueError("invariant factors must exceed 1")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a chain")
        self.invariant_factors = factors

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def p_rank(self, p):
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def __eq__(self, other):
        if not isinstance(other, DiscriminantGroup):
            return NotImplemented
        return self.invariant_factors == other.invariant_factors

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join("Z%d" % d for d in self.invariant_factors)

    def __repr__(self):
        return "DiscriminantGroup(%r)" % (self.invariant_factors,)


def gram_from_graph(g):
    names = g.names()
    idx = {name: i for i, name in enumerate(names)}
    n = len(names)
    gram = [[0] * n for _ in range(n)]
    for name, s in g.curves.items():
        gram[idx[name]][idx[name]] = s
    for key, mult in g.edges.items():
        a, b = tuple(key)
        gram[idx[a]][idx[b]] = mult
        gram[idx[b]][idx[a]] = mult
    return IntegralLattice(gram, names)


def ade_lattice(t):
    """Negative-definite root lattice of the given Dynkin type."""
    from .singularities import ADEType

    if isinstance(t, str):
        t = ADEType.parse(t)
    n = t.index
    g = CurveGraph()
    names = ["%s.%d" % (t, i + 1) for i in range(n)]
    for name in names:
        g.add_curve(name)
    if t.kind == "A":
        for i in range(n - 1):
            g.add_edge(names[i], names[i + 1])
    elif t.kind == "D":
        for i in range(n - 3):
            g.add_edge(names[i], names[i + 1])
        g.add_edge(names[n - 3], names[n - 2])
        g.add_edge(names[n - 3], names[n - 1])
    else:
        # E_n: a chain of n-1 curves with the last curve attached to
        # the third, giving arm lengths (2, n-4, 1) at the branch
        for i in range(n - 2):
            g.add_edge(names[i], names[i + 1])
        g.add_edge(names[2], names[n - 1])
    return gram_from_graph(g)


def direct_sum(a, b):
    n, m = a.rank, b.rank
    gram = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = a.gram[i][j]
    for i in range(m):
        for j in range(m):
            gram[n + i][n + j] = b.gram[i][j]
    names = list(a.basis_names)
    seen = set(names)
    for name in b.basis_names:
        fresh = name
        k = 2
        while fresh in seen:
            fresh = "%s@%d" % (name, k)
            k += 1
        seen.add(fresh)
        names.append(fresh)
    return IntegralLattice(gram, names)


def _det_bareiss(m):
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def discriminant(l):
    """Signed determinant of the Gram matrix (1 for the empty lattice)."""
    return _det_bareiss(l.gram)


def smith_normal_form(m):
    """Diagonal of the Smith form of an integer matrix, as a list.

    Entries are nonnegative and each divides the next; zeros sort last.
    The minimal-absolute-value pivot is re-selected after every
    reduction pass, which keeps intermediate entries small.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        while True:
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            piv = a[t][t]
            ragged = False
            for i in range(t + 1, rows):
                if a[i][t] % piv:
                    q = a[i][t] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    ragged = True
            if ragged:
                continue
            for j in range(t + 1, cols):
                if a[t][j] % piv:
                    q = a[t][j] // piv
                    for row in a:
                        row[j] -= q * row[t]
                    ragged = True
            if ragged:
                continue
            # the pivot divides its whole row and column: clear both
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // piv
                    for row in a:
                        row[j] -= q * row[t]
            stray = next(
                (i for i in range(t + 1, rows)
                 for j in range(t + 1, cols) if a[i][j] % piv), None)
            if stray is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[stray])]
        if a[t][t] == 0:
            break
        diag.append(abs(a[t][t]))
        t += 1
    while len(diag) < min(rows, cols):
        diag.append(0)
    return diag


def discriminant_group(l):
    if discriminant(l) == 0:
        raise ValueError("degenerate lattice has no discriminant group")
    diag = smith_normal_form(l.gram)
    return DiscriminantGroup([d for d in diag if d > 1])


def _gram_times(l, v):
    return [sum(l.gram[i][j] * v[j] for j in range(l.rank))
            for i in range(l.rank)]


def _square(l, v):
    gv = _gram_times(l, v)
    return sum(c * g for c, g in zip(v, gv))


def is_p_divisible(l, v, p):
    """Whether v/p extends l to an even integral overlattice.

    Numerically: Gram . v = 0 (mod p) and v . v = 0 (mod 2p^2).
    """
    assert p in (2, 3, 4), p
    coeffs = v.coeffs
    if len(coeffs) != l.rank:
        raise ValueError("class length does not match lattice rank")
    if any(x % p for x in _gram_times(l, coeffs)):
        return False
    return _square(l, coeffs) % (2 * p * p) == 0


def nikulin_count_check(l, v, p):
    """The curve-count side of the divisibility criteria.

    p=2: the support must be disjoint (-2)-curves and there must be 8
    or 16 of them.  p=3: the support must split into disjoint pairs of
    meeting (-2)-curves, with opposite unit coefficients inside each
    pair, and exactly six such pairs.
    """
    if p not in (2, 3):
        raise ValueError("count criteria exist for p = 2 and 3 only")
    coeffs = v.coeffs
    if len(coeffs) != l.rank:
        raise ValueError("class length does not match lattice rank")
    support = [i for i, c in enumerate(coeffs) if c]
    for i in support:
        if l.gram[i][i] != -2:
            raise ValueError("support curve %s is not a (-2)-curve"
                             % l.basis_names[i])
    if p == 2:
        for i in support:
            for j in support:
                if i < j and l.gram[i][j]:
                    raise ValueError(
                        "support curves %s and %s meet" % (
                            l.basis_names[i], l.basis_names[j]))
        return len(support) in (8, 16)
    pairs = []
    unpaired = set(support)
    for i in support:
        if i not in unpaired:
            continue
        mates = [j for j in support if j != i and l.gram[i][j]]
        if len(mates) != 1 or mates[0] not in unpaired:
            raise ValueError(
                "support does not split into disjoint meeting pairs "
                "(curve %s)" % l.basis_names[i])
        j = mates[0]
        back = [k for k in support if k != j and l.gram[j][k]]
        if back != [i]:
            raise ValueError(
                "support does not split into disjoint meeting pairs "
                "(curve %s)" % l.basis_names[j])
        unpaired.discard(i)
        unpaired.discard(j)
        pairs.append((i, j))
    if len(pairs) != 6:
        return False
    return all(
        sorted((coeffs[i], coeffs[j])) == [-1, 1] and l.gram[i][j] == 1
        for i, j in pairs)


def _hnf_rows(rows):
    """Row-style Hermite normal form; returns the nonzero rows."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    clean = clean and a[i][c] == 0
            if clean:
                break
        if r < m and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return a[:r]


def adjoin_class(l, v, p):
    """The overlattice generated by l and v/p.

    Computes a Hermite basis of the lattice spanned by the old basis
    and v/p, and the Gram matrix in that basis.  Divides the
    discriminant by exactly p^2 and keeps the lattice even.
    """
    if p == 1:
        return l
    if not is_p_divisible(l, v, p):
        raise ValueError("class is not %d-divisible on this lattice" % p)
    n = l.rank
    stacked = [[p if i == j else 0 for j in range(n)] for i in range(n)]
    stacked.append(list(v.coeffs))
    basis = _hnf_rows(stacked)
    assert len(basis) == n
    # new basis vectors are rows/p; Gram' = B G B^T / p^2
    bg = [[sum(row[k] * l.gram[k][j] for k in range(n)) for j in range(n)]
          for row in basis]
    gram = []
    for i in range(n):
        line = []
        for j in range(n):
            num = sum(bg[i][k] * basis[j][k] for k in range(n))
            assert num % (p * p) == 0, "overlattice Gram not integral"
            line.append(num // (p * p))
        gram.append(line)
    out = IntegralLattice(gram)
    assert out.is_even(), "overlattice not even"
    assert discriminant(out) * p * p == discriminant(l)
    return out


def index_formula_check(dW, dW2, ps):
    """d(W) = d(W') * (index)^2 with the index a product of primes."""
    index = 1
    for q in ps:
        index *= q
    return dW == dW2 * index * index


def cover_self_intersection(s, ramified, p):
    """Self-intersection transport along a degree-p cyclic cover.

    A component of the branch divisor pulls back with multiplicity p,
    so its reduced preimage has square s/p; an invariant curve off the
    branch locus pulls back to p disjoint copies glued into one class
    of square p*s.
    """
    if p not in (2, 3):
        raise ValueError("only degree 2 and 3 covers occur here")
    if ramified:
        if s % p:
            raise ValueError(
                "a branch curve needs self-intersection divisible by %d"
                % p)
        return s // p
    return p * s


def p_rank_bound_check(l, p, picard_rank):
    """p-rank of the discriminant group against 22 - rho."""
    return discriminant_group(l).p_rank(p) <= 22 - picard_rank
