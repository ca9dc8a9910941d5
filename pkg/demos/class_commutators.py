"""
Commutator closure of a 5-element class in A5
=============================================

The 12 five-cycles in one conjugacy class of A5 form a normal subset whose
commutators land back in the class (plus the identity), even though the
class is not closed under squaring.  Everything here is exact arithmetic
on permutations; the class-algebra numbers at the end come from the
shipped character table and must agree with the 144-pair enumeration.
"""

from bfl import (NormalSet, class_mult_count, commutator_closed_check,
                 cc_inverse_check, construct, enumerate_classes, load_table,
                 product_support)

G = construct("alt:5")
classes = enumerate_classes(G)
print("A5 classes:", ", ".join("%s (size %d)" % (c.label, c.size)
                               for c in classes))

# pick the first class of 5-cycles and scan all 12 x 12 commutators
C = NormalSet([c for c in classes if c.label == "5a"])
v = commutator_closed_check(G, C, 5)
print()
print(v.display_status, v.scenario, v.counters)
for note in v.notes:
    print("  ", note)

# plain products are a strictly stronger ask, and they fail here: c * d^-1
# with both factors in the class can be a 3-cycle
v = cc_inverse_check(C, 5)
print()
print(v.display_status, v.scenario, v.counters)
print("   first witness product order:",
      v.witnesses[0]["product_order"] if v.witnesses else "-")

# the character table tells the same story without touching elements:
# class 3 is 5a in the shipped table, the class is inverse-closed, and the
# support of 5a * 5a contains an order-3 class -- those are the failures
T = load_table("a5")
print()
print("character-table support of 5a * 5a:")
for k, count in sorted(product_support(T, 3, 3).items()):
    print("   class %d (element order %d): %d pairs per product"
          % (k, T.element_order(k), count))
print("pairs landing on a fixed identity:", class_mult_count(T, 3, 3, 0),
      "= class size", T.size(3))
