"""Indexed small groups: full element tables, subgroups, quotients."""

import math

from .classes import serial_key
from .elements import Overflow

TABLE_LIMIT = 256   # groups up to this order get a full multiplication table
_MEMO_CAP = 500_000


class SmallGroup:
    """A finite group as an indexed element list; index 0 is the identity.

    Multiplication runs off a full table for small orders, otherwise off the
    underlying elements with memoization.  Built by generate() (breadth-first
    closure, recording how each element arose from the generators), induced()
    (subgroup of an existing SmallGroup) or quotient().
    """

    def __init__(self, elements, gens, table=None, name="",
                 derivations=None, parent=None, parent_indices=None):
        self.elements = list(elements)
        self.gens = list(gens)
        self.table = table
        self.name = name
        self.derivations = derivations  # per element: None or (gen_pos, parent)
        self._parent = parent
        self._parent_indices = parent_indices
        self._index = None
        self._memo = {}
        self._inv = None
        self._orders = None
        self._classes = None

    # -- construction ------------------------------------------------------

    @classmethod
    def generate(cls, gens, identity, name="", cap=8192):
        """Breadth-first closure of the generators; identity gets index 0."""
        elements = [identity]
        index = {serial_key(identity): 0}
        derivations = [None]
        queue = 0
        while queue < len(elements):
            x = elements[queue]
            for gi, g in enumerate(gens):
                y = g * x
                key = serial_key(y)
                if key not in index:
                    if len(elements) >= cap:
                        raise Overflow("group closure exceeds cap %d" % cap)
                    index[key] = len(elements)
                    elements.append(y)
                    derivations.append((gi, queue))
            queue += 1
        gen_idx = []
        for g in gens:
            gi = index[serial_key(g)]
            if gi and gi not in gen_idx:
                gen_idx.append(gi)
        if not gen_idx:
            gen_idx = [0]
        S = cls(elements, gen_idx, name=name, derivations=derivations)
        S._index = index
        if len(elements) <= TABLE_LIMIT:
            S._build_table(gens)
        return S

    @classmethod
    def from_group(cls, G, name="", cap=8192):
        return cls.generate(list(G.gens), G.identity, name=name or G.name,
                            cap=cap)

    def _build_table(self, raw_gens):
        """Rows by composition along the derivation tree: one underlying
        product per (generator, element) pair, then tuple indexing."""
        n = len(self.elements)
        idx = self._index
        rows = [None] * n
        rows[0] = tuple(range(n))
        # generator left-translation rows, one underlying product per entry
        gen_rows = {}
        for gi in sorted({d[0] for d in self.derivations if d}):
            g = raw_gens[gi]
            gen_rows[gi] = tuple(idx[serial_key(g * x)] for x in self.elements)
        for i in range(1, n):
            gi, parent = self.derivations[i]
            base = rows[parent]
            grow = gen_rows[gi]
            rows[i] = tuple(grow[j] for j in base)
        self.table = rows

    def induced(self, indices):
        """The subgroup on a closed set of indices, as its own SmallGroup."""
        sub = sorted(indices)
        if sub[0] != 0:
            raise ValueError("subgroup must contain the identity")
        remap = {q: s for s, q in enumerate(sub)}
        n = len(sub)
        table = [tuple(remap[self.mul(a, b)] for b in sub) for a in sub]
        gens = _minimal_gens_for_table(table)
        S = SmallGroup([self.elements[q] for q in sub], gens, table=table,
                       name="%s|%d" % (self.name, n),
                       parent=self, parent_indices=sub)
        return S

    # -- arithmetic --------------------------------------------------------

    @property
    def order(self):
        return len(self.elements)

    def mul(self, i, j):
        if self.table is not None:
            return self.table[i][j]
        key = (i, j)
        t = self._memo.get(key)
        if t is None:
            t = self._index[serial_key(self.elements[i] * self.elements[j])]
            if len(self._memo) < _MEMO_CAP:
                self._memo[key] = t
        return t

    def inv(self, i):
        if self._inv is None:
            self._inv = [None] * self.order
        if self._inv[i] is None:
            if self.table is not None:
                self._inv[i] = self.table[i].index(0)
            else:
                self._inv[i] = self._index[serial_key(~self.elements[i])]
        return self._inv[i]

    def conj(self, i, g):
        """Index of g^-1 * x_i * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def comm(self, i, j):
        """Index of the commutator x_i^-1 x_j^-1 x_i x_j."""
        return self.mul(self.mul(self.inv(i), self.inv(j)),
                        self.mul(i, j))

    def element_order(self, i):
        if self._orders is None:
            self._orders = [None] * self.order
        if self._orders[i] is None:
            k, y = 1, i
            while y != 0:
                y = self.mul(y, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def order_histogram(self):
        hist = {}
        for i in range(self.order):
            o = self.element_order(i)
            hist[o] = hist.get(o, 0) + 1
        return hist

    def exponent(self):
        return math.lcm(*(self.element_order(i) for i in range(self.order)))

    # -- structure ---------------------------------------------------------

    def closure(self, seed):
        """Indices of the subgroup generated by the seed indices."""
        got = {0}
        gens = [s for s in seed if s]
        queue = [0]
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.mul(g, x)
                if y not in got:
                    got.add(y)
                    queue.append(y)
        return frozenset(got)

    def center_indices(self):
        """Commuting with every generator is enough to be central."""
        out = []
        for i in range(self.order):
            if all(self.mul(i, g) == self.mul(g, i) for g in self.gens):
                out.append(i)
        return frozenset(out)

    def normal_closure(self, seed):
        """Smallest normal subgroup containing the seed indices."""
        gens = sorted({s for s in seed if s})
        while True:
            got = self.closure(gens)
            fresh = []
            for g in self.gens:
                for x in sorted(got):
                    y = self.conj(x, g)
                    if y not in got:
                        fresh.append(y)
            if not fresh:
                return got
            gens.extend(fresh)

    def derived_indices(self):
        """The commutator subgroup: normal closure of generator commutators."""
        seeds = {self.comm(a, b) for a in self.gens for b in self.gens}
        return self.normal_closure(seeds)

    def class_partition(self):
        """Conjugacy classes as frozensets of indices, ordered by least index."""
        if self._classes is not None:
            return self._classes
        seen = [False] * self.order
        out = []
        for i in range(self.order):
            if seen[i]:
                continue
            cls = {i}
            queue = [i]
            while queue:
                x = queue.pop()
                for g in self.gens:
                    y = self.conj(x, g)
                    if y not in cls:
                        cls.add(y)
                        queue.append(y)
            for x in cls:
                seen[x] = True
            out.append(frozenset(cls))
        self._classes = out
        return out

    def __repr__(self):
        return "SmallGroup(%s, order %d)" % (self.name or "?", self.order)


def _minimal_gens_for_table(table):
    """Greedy generating set for a table-backed group."""
    n = len(table)
    gens = []
    got = {0}
    for i in range(1, n):
        if i in got:
            continue
        gens.append(i)
        got = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for g in gens:
                y = table[g][x]
                if y not in got:
                    got.add(y)
                    queue.append(y)
        if len(got) == n:
            break
    return gens or [0]


def is_p_group(H, p):
    """Order is a power of p; H may be a Group or a SmallGroup."""
    n = H.order() if callable(H.order) else H.order
    while n % p == 0:
        n //= p
    return n == 1


# -- subgroup enumeration ---------------------------------------------------

def subgroups(S, cap=1024):
    """All subgroups as index-frozensets, by closing joins of cyclic ones."""
    if S.order > cap:
        raise Overflow("subgroup enumeration capped at order %d, group has %d"
                       % (cap, S.order))
    cyclic = {}
    for i in range(S.order):
        c = S.closure([i])
        if c not in cyclic:
            cyclic[c] = (i,)
    subs = {frozenset([0]): ()}
    subs.update(cyclic)
    while True:
        fresh = {}
        for A, agens in sorted(subs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            for C, cgens in sorted(cyclic.items(),
                                   key=lambda kv: (len(kv[0]), sorted(kv[0]))):
                if C <= A:
                    continue
                join = S.closure(agens + cgens)
                if join not in subs and join not in fresh:
                    fresh[join] = agens + cgens
        if not fresh:
            break
        subs.update(fresh)
    return sorted(subs, key=lambda A: (len(A), sorted(A)))


def normal_subgroups(S):
    """Subgroups closed under conjugation by the generators.

    Enumerated directly as joins of normal closures of classes, which agrees
    with filtering subgroups() but does not need the full lattice.
    """
    atoms = []
    for cls in S.class_partition():
        rep = min(cls)
        if rep == 0:
            continue
        nc = S.normal_closure([rep])
        if nc not in atoms:
            atoms.append(nc)
    out = {frozenset([0]), frozenset(range(S.order))}
    out.update(atoms)
    while True:
        fresh = set()
        for A in out:
            for B in atoms:
                if B <= A:
                    continue
                join = S.normal_closure(A | B)
                if join not in out:
                    fresh.add(join)
        if not fresh:
            break
        out.update(fresh)
    return sorted(out, key=lambda A: (len(A), sorted(A)))


def quotient(S, N):
    """Coset group of a normal index-set N; identity coset gets index 0."""
    N = frozenset(N)
    if 0 not in N:
        raise ValueError("N must contain the identity")
    for a in N:
        for b in N:
            if S.mul(a, b) not in N:
                raise ValueError("N is not closed under multiplication")
    for g in S.gens:
        for x in N:
            if S.conj(x, g) not in N:
                raise ValueError("N is not normal: conjugation escapes")
    coset_id = {}
    reps = []
    cosets = []
    for x in range(S.order):
        if x in coset_id:
            continue
        cs = frozenset(S.mul(x, n) for n in N)
        cid = len(reps)
        for y in cs:
            coset_id[y] = cid
        reps.append(x)
        cosets.append(cs)
    n = len(reps)
    table = [tuple(coset_id[S.mul(reps[a], reps[b])] for b in range(n))
             for a in range(n)]
    gens = []
    for g in S.gens:
        cg = coset_id[g]
        if cg and cg not in gens:
            gens.append(cg)
    if not gens:
        gens = [0]
    return SmallGroup(cosets, gens, table=table,
                      name="%s/%d" % (S.name, len(N)))
