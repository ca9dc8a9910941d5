"""Conjugacy classes, normal sets, and deterministic class labels.

Labels are "<order><letter>": classes sharing an element order are lettered
a, b, c, ... in (class size, minimal serialized representative) order, so the
labeling is stable across runs and machines.
"""

from collections import Counter
from math import factorial

from .elements import Permutation, element_order, inverse, commutator, compose
from .groups import CLOSURE_CAP, Overflow

PAIR_CAP = 2_000_000


class SelectorError(ValueError):
    """A class selector that does not resolve to exactly one class."""


def serial_key(x):
    """Total order on elements of one group, via their serialized form."""
    d = x.serialize()
    if d["kind"] == "perm":
        return (tuple(d["images"]),)
    rows = tuple(tuple(r) for r in d["rows"])
    return (rows, d.get("frob", 0))


class ConjClass:
    """One conjugacy class: representative, size, order, optional element set."""

    __slots__ = ("group", "representative", "size", "order", "label", "elements")

    def __init__(self, group, representative, size, order, label=None, elements=None):
        self.group = group
        self.representative = representative
        self.size = size
        self.order = order
        self.label = label
        self.elements = elements

    def __repr__(self):
        return "ConjClass(%s, size=%d, order=%d)" % (
            self.label or "?", self.size, self.order)

    def __eq__(self, other):
        if not isinstance(other, ConjClass):
            return NotImplemented
        if self.elements is not None and other.elements is not None:
            return self.elements == other.elements
        return (self.group is other.group
                and self.representative == other.representative)

    def __hash__(self):
        return hash((self.size, self.order, self.representative))


class NormalSet:
    """A union of conjugacy classes (closed under conjugation by construction)."""

    __slots__ = ("classes",)

    def __init__(self, classes):
        self.classes = tuple(classes)

    @property
    def labels(self):
        return tuple(c.label for c in self.classes)

    @property
    def elements(self):
        """Union element set, or None when some class is not enumerated."""
        if any(c.elements is None for c in self.classes):
            return None
        out = set()
        for c in self.classes:
            out |= c.elements
        return frozenset(out)

    @property
    def size(self):
        return sum(c.size for c in self.classes)

    def largest_element_order(self):
        if not self.classes:
            raise ValueError("empty normal set has no element orders")
        return max(c.order for c in self.classes)

    def __repr__(self):
        return "NormalSet(%s)" % ", ".join(self.labels)


def _letter(i):
    """0 -> a, 25 -> z, 26 -> aa, ..."""
    out = ""
    i += 1
    while i:
        i, rem = divmod(i - 1, 26)
        out = chr(ord("a") + rem) + out
    return out


def enumerate_classes(G, cap=CLOSURE_CAP):
    """All conjugacy classes of G, labeled; needs the full element store.

    Results are cached on the group.  Raises Overflow when |G| exceeds cap.
    """
    cached = getattr(G, "_classes", None)
    if cached is not None:
        return cached
    els = G.elements(cap=cap)
    gens = G.gens
    invs = [inverse(g) for g in gens]
    pool = set(els)
    raw = []
    while pool:
        x = pool.pop()
        cls = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g, gi in zip(gens, invs):
                    z = gi * y * g
                    if z not in cls:
                        cls.add(z)
                        new.append(z)
            frontier = new
        pool -= cls
        rep = min(cls, key=serial_key)
        raw.append((element_order(rep), len(cls), rep, frozenset(cls)))
    raw.sort(key=lambda t: (t[0], t[1], serial_key(t[2])))
    out = []
    counts = Counter()
    for order, size, rep, cls in raw:
        label = "%d%s" % (order, _letter(counts[order]))
        counts[order] += 1
        out.append(ConjClass(G, rep, size, order, label=label, elements=cls))
    G._classes = out
    return out


def class_of(G, x, cap=CLOSURE_CAP):
    """The class of x: a labeled one from the cache when available, else fresh."""
    cached = getattr(G, "_classes", None)
    if cached is not None:
        for c in cached:
            if x in c.elements:
                return c
    cls = G.conjugacy_class(x, cap=cap)
    rep = min(cls, key=serial_key)
    return ConjClass(G, rep, len(cls), element_order(rep), elements=cls)


def involution_classes_sym(G, n):
    """Involution classes of Sym(n) by cycle type, with exact sizes and the
    same labels full enumeration would assign, without enumerating n!."""
    raw = []
    for k in range(1, n // 2 + 1):
        size = factorial(n) // (2 ** k * factorial(k) * factorial(n - 2 * k))
        m = n - 2 * k
        images = list(range(m))
        for i in range(m, n, 2):
            images += [i + 1, i]
        rep = Permutation(images)  # minimal-image member of its class
        raw.append((size, rep, k))
    raw.sort(key=lambda t: (t[0], serial_key(t[1])))
    out = []
    for i, (size, rep, k) in enumerate(raw):
        c = ConjClass(G, rep, size, 2, label="2%s" % _letter(i))
        out.append(c)
    return out


def is_p_element(x, p):
    """True iff the order of x is a power of p (1 counts)."""
    o = element_order(x)
    while o % p == 0:
        o //= p
    return o == 1


def _classes_of_arg(S):
    if isinstance(S, NormalSet):
        return list(S.classes)
    if isinstance(S, ConjClass):
        return [S]
    raise TypeError("expected ConjClass or NormalSet, got %r" % (S,))


def _elements_of(S):
    """Element list of a ConjClass / NormalSet / plain iterable of elements."""
    if isinstance(S, (ConjClass, NormalSet)):
        els = S.elements
        if els is None:
            raise ValueError("element list not available for %r" % (S,))
        return list(els)
    return list(S)


def inverse_set(C):
    """The normal set of inverses; reuses labeled classes when cached."""
    out = []
    for c in _classes_of_arg(C):
        rep = inverse(c.representative)
        els = (frozenset(inverse(x) for x in c.elements)
               if c.elements is not None else None)
        hit = None
        cached = getattr(c.group, "_classes", None) if c.group is not None else None
        if cached is not None and els is not None:
            for k in cached:
                if k.elements == els:
                    hit = k
                    break
        if hit is None:
            hit = ConjClass(c.group, rep, c.size, c.order,
                            label="inv(%s)" % c.label, elements=els)
        out.append(hit)
    return NormalSet(out)


def product_set(C, D, cap=PAIR_CAP):
    """The multiset {c * d}: a Counter keyed by element."""
    cs = _elements_of(C)
    ds = _elements_of(D)
    if len(cs) * len(ds) > cap:
        raise Overflow("pair count %d exceeds cap %d" % (len(cs) * len(ds), cap))
    out = Counter()
    for c in cs:
        for d in ds:
            out[compose(c, d)] += 1
    return out


def commutator_pairs_set(C, D, cap=PAIR_CAP):
    """The set {[c, d] : c in C, d in D}."""
    cs = _elements_of(C)
    ds = _elements_of(D)
    if len(cs) * len(ds) > cap:
        raise Overflow("pair count %d exceeds cap %d" % (len(cs) * len(ds), cap))
    out = set()
    for c in cs:
        ci = inverse(c)
        for d in ds:
            out.add(ci * inverse(d) * c * d)
    return frozenset(out)


def largest_element_order(S):
    """Largest element order in a ConjClass or NormalSet."""
    if isinstance(S, ConjClass):
        return S.order
    return S.largest_element_order()


def select_class(classes, spec):
    """Resolve a selector against a class list.

    Grammar: a label ("5a"), comma-joined matchers "order:<k>,size:<m>"
    (any nonempty subset), or "fpf2" for the fixed-point-free involution
    class of a permutation group.  Must match exactly one class.
    """
    spec = spec.strip()
    hits = [c for c in classes if c.label == spec]
    if len(hits) == 1:
        return hits[0]
    if spec == "fpf2":
        hits = []
        for c in classes:
            r = c.representative
            if c.order == 2 and isinstance(r, Permutation) \
                    and all(r(i) != i for i in range(r.degree)):
                hits.append(c)
    elif ":" in spec:
        conds = {}
        for part in spec.split(","):
            part = part.strip()
            if ":" not in part:
                raise SelectorError("bad selector term %r" % part)
            key, _, val = part.partition(":")
            if key not in ("order", "size") or not val.isdigit():
                raise SelectorError("bad selector term %r" % part)
            conds[key] = int(val)
        if not conds:
            raise SelectorError("empty selector %r" % spec)
        hits = [c for c in classes
                if all(getattr(c, k) == v for k, v in conds.items())]
    elif not hits:
        raise SelectorError("no class labeled %r" % spec)
    if len(hits) != 1:
        raise SelectorError("selector %r matches %d classes, need exactly 1"
                            % (spec, len(hits)))
    return hits[0]
