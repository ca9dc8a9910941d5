"""Group-level algorithms: stabilizer chains, closure, matrix-to-permutation actions.

The stabilizer chain is a deterministic incremental Schreier-Sims: generators
are sifted in one at a time, every Schreier generator of an extended orbit is
processed exactly once, and at completion the order is the product of the
transversal sizes.  Chains are built over a permutation image; matrix and
semilinear groups get one through `matrix_action` (orbit of spanning seed
vectors), with the original elements carried along as shadows so membership
tests and random elements come back in the caller's own representation.
"""

from collections import deque
from math import prod

from .elements import (Permutation, SquareMatrix, SemilinearElement, Overflow,
                       identity_like)

CLOSURE_CAP = 2_000_000
ORBIT_CAP = 200_000


class _Shadow:
    """A permutation plus the underlying element it came from."""

    __slots__ = ("perm", "elem")

    def __init__(self, perm, elem):
        self.perm = perm
        self.elem = elem

    def __mul__(self, other):
        if self.elem is self.perm and other.elem is other.perm:
            p = self.perm * other.perm
            return _Shadow(p, p)
        return _Shadow(self.perm * other.perm, self.elem * other.elem)

    def __invert__(self):
        if self.elem is self.perm:
            p = ~self.perm
            return _Shadow(p, p)
        return _Shadow(~self.perm, ~self.elem)


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point, identity):
        self.point = point
        self.gens = []
        self.transversal = {point: identity}


class Chain:
    """Stabilizer chain over shadowed permutations.

    Strong generators are stored nested: a generator that fixes the first d
    base points sits in the generating list of every level <= d.  Building is
    the classic bottom-up verification: scan Schreier generators at the
    deepest unverified level, register any non-trivial sift residue at its
    exact depth (which strictly grows that level's group), and resume
    verification there.  Levels deeper than a registration are untouched by
    it, so the sweep terminates with every level clean.
    """

    def __init__(self, degree, identity_shadow):
        self.degree = degree
        self.identity = identity_shadow
        self.levels = []
        self.kernel_witness = None  # non-identity element acting trivially

    def order(self):
        return prod(len(L.transversal) for L in self.levels) if self.levels else 1

    def build(self, shadows):
        for w in shadows:
            self._register(w)
        i = len(self.levels) - 1
        while i >= 0:
            d = self._verify(i)
            i = i - 1 if d is None else d

    def sift(self, w, start=0):
        """Strip w through the chain; return (residue, level it got stuck at)."""
        for lev in range(start, len(self.levels)):
            L = self.levels[lev]
            pt = w.perm(L.point)
            if pt == L.point:
                continue
            if pt not in L.transversal:
                return w, lev
            w = ~L.transversal[pt] * w
        return w, len(self.levels)

    def _note_kernel(self, w):
        if w.elem is not w.perm and not w.elem.is_identity():
            self.kernel_witness = w.elem

    def _register(self, w):
        """Install w as a strong generator at its depth; return that depth."""
        if w.perm.is_identity():
            self._note_kernel(w)
            return None
        depth = None
        for idx, L in enumerate(self.levels):
            if w.perm(L.point) != L.point:
                depth = idx
                break
        if depth is None:
            moved = min(i for i, j in enumerate(w.perm.images) if i != j)
            self.levels.append(_Level(moved, self.identity))
            depth = len(self.levels) - 1
        for k in range(depth + 1):
            L = self.levels[k]
            L.gens.append(w)
            self._recompute_orbit(L)
        return depth

    def _recompute_orbit(self, L):
        t = {L.point: self.identity}
        queue = deque([L.point])
        while queue:
            pt = queue.popleft()
            u = t[pt]
            for g in L.gens:
                img = g.perm(pt)
                if img not in t:
                    t[img] = g * u
                    queue.append(img)
        L.transversal = t

    def _verify(self, i):
        """Scan level i's Schreier generators; register the first dirty residue
        and return its depth, or None when the level is clean."""
        L = self.levels[i]
        for pt in list(L.transversal):
            u = L.transversal[pt]
            for g in L.gens:
                img = g.perm(pt)
                s = ~L.transversal[img] * (g * u)  # fixes base[:i+1]
                if s.perm.is_identity():
                    self._note_kernel(s)
                    continue
                r, _ = self.sift(s, i + 1)
                if r.perm.is_identity():
                    self._note_kernel(r)
                    continue
                return self._register(r)
        return None

    def contains_perm_shadow(self, w):
        res, _ = self.sift(w)
        return res.perm.is_identity()

    def random_shadow(self, rng):
        """Uniformly random element as a shadow (product of transversal reps)."""
        w = self.identity
        for L in self.levels:
            pts = sorted(L.transversal)
            w = w * L.transversal[rng.choice(pts)]
        return w


class ActionRecord:
    """Permutation image of a matrix/semilinear generator list on a vector orbit."""

    __slots__ = ("points", "index", "perms", "spanning")

    def __init__(self, points, index, perms, spanning):
        self.points = points
        self.index = index
        self.perms = perms
        self.spanning = spanning

    @property
    def degree(self):
        return len(self.points)


def matrix_action(gens, seeds=None, cap=ORBIT_CAP):
    """Orbit the seed vectors under the generators; return the permutation image.

    Faithful whenever the orbit spans (linear case); non-spanning seeds are
    flagged via .spanning = False rather than rejected.  Overflow past cap.
    """
    if not gens:
        raise ValueError("matrix_action needs at least one generator")
    F = gens[0].field
    n = gens[0].n
    if seeds is None:
        seeds = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    seeds = [tuple(v) for v in seeds]
    index = {}
    points = []
    queue = deque()
    for v in seeds:
        if v not in index:
            index[v] = len(points)
            points.append(v)
            queue.append(v)
    while queue:
        v = queue.popleft()
        for g in gens:
            w = g.apply(v)
            if w not in index:
                if len(points) >= cap:
                    raise Overflow("orbit exceeds cap %d" % cap)
                index[w] = len(points)
                points.append(w)
                queue.append(w)
    perms = [Permutation([index[g.apply(v)] for v in points]) for g in gens]
    spanning = _rank_of(F, points) == n
    return ActionRecord(tuple(points), index, perms, spanning)


def _rank_of(F, vectors):
    basis = []
    for v in vectors:
        v = list(v)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if v[lead]:
                c = v[lead]
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, b)]
        if any(v):
            lead = next(i for i, x in enumerate(v) if x)
            v = [F.mul(F.inv(v[lead]), x) for x in v]
            basis.append(v)
    return len(basis)


def closure_enumerate(gens, cap=CLOSURE_CAP):
    """The full set <gens> by breadth-first product closure; Overflow past cap."""
    live = [g for g in gens if not g.is_identity()]
    if not live:
        if not gens:
            raise ValueError("closure of an empty generator list has no ambient")
        return {identity_like(gens[0])}
    e = identity_like(live[0])
    els = {e}
    frontier = [e]
    while frontier:
        new = []
        for x in frontier:
            for g in live:
                y = g * x
                if y not in els:
                    if len(els) >= cap:
                        raise Overflow("closure exceeds cap %d" % cap)
                    els.add(y)
                    new.append(y)
        frontier = new
    return els


class Group:
    """Generators plus lazily built stabilizer-chain data."""

    def __init__(self, gens, name=None, identity=None, seeds=None, meta=None):
        self.gens = list(gens)
        self.name = name
        self.meta = dict(meta or {})
        if self.gens:
            self._identity = identity_like(self.gens[0])
        elif identity is not None:
            self._identity = identity
        else:
            raise ValueError("empty generator list needs an explicit identity")
        self._seeds = seeds
        self._chain = None
        self._action = None
        self._elements = None

    @property
    def kind(self):
        return type(self._identity).__name__

    @property
    def identity(self):
        return self._identity

    @property
    def action(self):
        """Permutation action record (identity map for permutation groups)."""
        if self._action is None and not isinstance(self._identity, Permutation):
            self._action = matrix_action(self.gens, seeds=self._seeds)
        return self._action

    @property
    def chain(self):
        if self._chain is None:
            if isinstance(self._identity, Permutation):
                degree = self._identity.degree
                ident = _Shadow(self._identity, self._identity)
                chain = Chain(degree, ident)
                chain.build([_Shadow(g, g) for g in self.gens])
            else:
                act = self.action
                pid = Permutation.identity(act.degree)
                ident = _Shadow(pid, self._identity)
                chain = Chain(act.degree, ident)
                chain.build([_Shadow(p, g) for p, g in zip(act.perms, self.gens)])
            self._chain = chain
        return self._chain

    @property
    def faithful(self):
        """False when the permutation image provably collapses something."""
        if isinstance(self._identity, Permutation):
            return True
        return self.action.spanning and self.chain.kernel_witness is None

    def order(self):
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def to_perm(self, x):
        """Image of x in the chain's permutation representation (None if it escapes)."""
        if isinstance(x, Permutation):
            return x
        act = self.action
        images = []
        for v in act.points:
            w = x.apply(v)
            idx = act.index.get(w)
            if idx is None:
                return None
            images.append(idx)
        return Permutation(images)

    def contains(self, x):
        p = self.to_perm(x)
        if p is None or p.degree != self.chain.degree:
            return False
        return self.chain.contains_perm_shadow(_Shadow(p, x))

    def random_element(self, rng):
        return self.chain.random_shadow(rng).elem

    def elements(self, cap=CLOSURE_CAP):
        """Full element set (cached); Overflow if the order exceeds cap."""
        if self._elements is None:
            if self.gens:
                self._elements = frozenset(closure_enumerate(self.gens, cap=cap))
            else:
                self._elements = frozenset([self._identity])
        return self._elements

    def conjugacy_class(self, x, cap=CLOSURE_CAP):
        """Orbit of x under conjugation by the generators (full class)."""
        seen = {x}
        frontier = [x]
        invs = [~g for g in self.gens]
        while frontier:
            new = []
            for y in frontier:
                for g, gi in zip(self.gens, invs):
                    z = gi * y * g
                    if z not in seen:
                        if len(seen) >= cap:
                            raise Overflow("class exceeds cap %d" % cap)
                        seen.add(z)
                        new.append(z)
            frontier = new
        return frozenset(seen)

    def __repr__(self):
        return "Group(%s, %d gens)" % (self.name or self.kind, len(self.gens))


def build_chain(G):
    """Force the stabilizer chain and return the exact group order."""
    return G.order()
