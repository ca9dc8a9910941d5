"""Character tables and class-multiplication structure constants."""

import json
import os

from .cyclotomic import Cyclotomic
from .report import Verdict, HOLDS, FAILS

TOL = 1e-6
_PACKAGED_DIR = os.path.join(os.path.dirname(__file__), "tables")


class TableError(ValueError):
    """A character-table file that fails parsing or validation."""


class CharacterTable:
    """Validated table: per-class data plus the matrix of irreducible values.

    classes: list of dicts {"size", "element_order", "powermap": {p: index}};
    irreducibles: rows of Cyclotomic values, one row per character, columns
    in class order with class 0 the identity.
    """

    def __init__(self, name, order, classes, irreducibles):
        self.name = str(name)
        self.order = int(order)
        self.classes = classes
        self.irreducibles = irreducibles
        self._validate()
        # one complex evaluation per entry, reused by every query
        self.X = [[v.value() for v in row] for row in irreducibles]
        self._check_orthogonality()

    # -- basic shape -------------------------------------------------------

    @property
    def n_classes(self):
        return len(self.classes)

    def size(self, k):
        return self.classes[k]["size"]

    def element_order(self, k):
        return self.classes[k]["element_order"]

    @property
    def degrees(self):
        return tuple(row[0].as_int() for row in self.irreducibles)

    def _validate(self):
        r = len(self.classes)
        if self.order < 1 or r < 1:
            raise TableError("%s: empty table" % self.name)
        if len(self.irreducibles) != r:
            raise TableError("%s: size mismatch: %d characters vs %d classes"
                             % (self.name, len(self.irreducibles), r))
        for row in self.irreducibles:
            if len(row) != r:
                raise TableError("%s: size mismatch: ragged character row"
                                 % self.name)
        if self.classes[0]["size"] != 1 or self.classes[0]["element_order"] != 1:
            raise TableError("%s: class 0 must be the identity class" % self.name)
        if sum(c["size"] for c in self.classes) != self.order:
            raise TableError("%s: class sizes sum to %d, order is %d"
                             % (self.name, sum(c["size"] for c in self.classes),
                                self.order))
        for c in self.classes:
            if c["size"] < 1 or c["element_order"] < 1:
                raise TableError("%s: bad class data %r" % (self.name, c))
            for p, img in c["powermap"].items():
                if self.order % p != 0 or not 0 <= img < r:
                    raise TableError("%s: bad powermap entry %r -> %r"
                                     % (self.name, p, img))
        degs = []
        for row in self.irreducibles:
            v = row[0]
            if not v.is_rational_integer() or v.as_int() < 1:
                raise TableError("%s: degree column has a non-positive or "
                                 "irrational entry %r" % (self.name, v))
            degs.append(v.as_int())
        if sum(d * d for d in degs) != self.order:
            raise TableError("%s: sum of squared degrees %d != order %d"
                             % (self.name, sum(d * d for d in degs), self.order))

    def _check_orthogonality(self):
        r = self.n_classes
        sizes = [c["size"] for c in self.classes]
        for a in range(r):
            for b in range(a, r):
                acc = 0j
                for k in range(r):
                    acc += sizes[k] * self.X[a][k] * self.X[b][k].conjugate()
                acc /= self.order
                want = 1.0 if a == b else 0.0
                if abs(acc - want) > TOL:
                    raise TableError(
                        "%s: row orthogonality violated for characters "
                        "(%d, %d): got %r" % (self.name, a, b, acc))

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "name": self.name,
            "order": self.order,
            "classes": [{"size": c["size"],
                         "element_order": c["element_order"],
                         "powermap": {str(p): i
                                      for p, i in sorted(c["powermap"].items())}}
                        for c in self.classes],
            "irreducibles": [[v.to_json() for v in row]
                             for row in self.irreducibles],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            name = obj["name"]
            order = obj["order"]
            classes = [{"size": int(c["size"]),
                        "element_order": int(c["element_order"]),
                        "powermap": {int(p): int(i)
                                     for p, i in c["powermap"].items()}}
                       for c in obj["classes"]]
            irreducibles = [[Cyclotomic.from_json(v) for v in row]
                            for row in obj["irreducibles"]]
        except (KeyError, TypeError, ValueError) as e:
            raise TableError("malformed table object: %s" % e) from e
        return cls(name, order, classes, irreducibles)


def parse_table(path):
    """Read and validate a character-table file; hard failure otherwise."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise TableError("cannot read %s: %s" % (path, e)) from e
    except json.JSONDecodeError as e:
        raise TableError("cannot parse %s: %s" % (path, e)) from e
    if not isinstance(obj, dict):
        raise TableError("%s: top level must be an object" % path)
    return CharacterTable.from_json(obj)


def table_search_path():
    """Directories searched for tables by name; BFL_TABLE_DIR goes first."""
    dirs = []
    env = os.environ.get("BFL_TABLE_DIR")
    if env:
        dirs.extend(env.split(os.pathsep))
    dirs.append(_PACKAGED_DIR)
    return dirs

def load_table(name_or_path):
    """Load a table by file path, or by name from the search path."""
    if os.sep in name_or_path or name_or_path.endswith(".json"):
        return parse_table(name_or_path)
    for d in table_search_path():
        cand = os.path.join(d, name_or_path + ".json")
        if os.path.exists(cand):
            return parse_table(cand)
    raise TableError("no table named %r on the search path %r"
                     % (name_or_path, table_search_path()))


# -- class algebra ---------------------------------------------------------

def class_mult_count(T, i, j, e_class):
    """Number of pairs (c, d) in C_i x C_j with c*d = e, for one fixed e.

    Classical column formula: |C_i||C_j|/|G| * sum over characters of
    chi(c_i) chi(c_j) conj(chi(e)) / chi(1); must land within 1e-6 of an
    integer or the table is declared bad.
    """
    acc = 0j
    for row, d in zip(T.X, T.degrees):
        acc += row[i] * row[j] * row[e_class].conjugate() / d
    val = T.size(i) * T.size(j) / T.order * acc
    n = round(val.real)
    if abs(val - n) > TOL:
        raise TableError("%s: structure constant (%d,%d,%d) evaluates to %r, "
                         "not near an integer" % (T.name, i, j, e_class, val))
    return n


def product_support(T, i, j):
    """Class indices hit by C_i * C_j, with their per-element pair counts."""
    out = {}
    for k in range(T.n_classes):
        n = class_mult_count(T, i, j, k)
        if n:
            out[k] = n
    return out


def inverse_class(T, i):
    """Index of the class of inverses, found by conjugate character columns."""
    hits = []
    for k in range(T.n_classes):
        if all(abs(row[k] - row[i].conjugate()) <= TOL for row in T.X):
            hits.append(k)
    if len(hits) != 1:
        raise TableError("%s: inverse class of %d not unique: %r"
                         % (T.name, i, hits))
    return hits[0]


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def bf_pair_table(T, i, j, p):
    """Class-level test: everything in the support of C_i*C_j is a p-element.

    Necessary-only: p-power product orders do not by themselves force every
    generated subgroup to be a p-group.  The one clean exception is p = 2 with
    both classes involutions, where two involutions generate a dihedral group
    whose order is read off the product order, making the test equivalent.
    """
    support = product_support(T, i, j)
    offenders = []
    for k in sorted(support):
        o = T.element_order(k)
        if not _is_p_power(o, p):
            offenders.append({"class": k, "element_order": o,
                              "count": support[k]})
    notes = ["necessary-only class-level test"]
    if p == 2 and T.element_order(i) == 2 and T.element_order(j) == 2:
        notes = ["both classes are involutions: product-order test is "
                 "equivalent to the pair test"]
    return Verdict(
        scenario="bf-pair-table:%s[%d,%d],p=%d" % (T.name, i, j, p),
        status=FAILS if offenders else HOLDS,
        witnesses=offenders,
        counters={"support_classes": len(support),
                  "offending_classes": len(offenders)},
        notes=notes)
