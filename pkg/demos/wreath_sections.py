"""
Finding Z_p wr Z_p inside small p-groups
========================================

The wreath model on p^2 points is the smallest non-abelian marker for
"wild" p-group structure here: D8 is the p=2 model itself, Q8 contains
no copy even as a section, and the p=3 model of order 81 shows up as a
quotient of itself.  The module checks at the end tie the same search
to linear actions: when the generator commutator images split the module
as a direct sum, a wreath section must exist -- and the search agrees.
"""

from bfl import (SmallGroup, build_wreath, construct, cor22_check,
                 iso_to_wreath, lemma21_check, standard_battery,
                 wreath_section_detect)

d8 = SmallGroup.from_group(construct("dihedral:8"))
q8 = SmallGroup.from_group(construct("q8"))

sv = wreath_section_detect(d8, 2)
print("D8:", "found" if sv.found else "none", sv.witness)

sv = wreath_section_detect(q8, 2, tier="full")
print("Q8:", "found" if sv.found else "none",
      "(decisive: every subgroup quotient checked)")

W3 = build_wreath(3)
sv = wreath_section_detect(SmallGroup.from_group(W3.group), 3)
print("Z3 wr Z3:", "found" if sv.found else "none",
      "- subgroup of size %d over normal part of size %d"
      % (len(sv.witness["subgroup"]), len(sv.witness["normal"])))

print()
print("isomorphism screen:")
for name, G, p in (("Z3 wr Z3 model", W3.group, 3),
                   ("Z9", construct("cyclic:9"), 3),
                   ("D8", construct("dihedral:8"), 2),
                   ("Z8", construct("cyclic:8"), 2),
                   ("Q8", construct("q8"), 2)):
    print("   %-14s -> %s" % (name, iso_to_wreath(G, p)))

# module actions: a few battery cases, with the direct-sum cross-check
print()
for case in standard_battery():
    if case["name"] not in ("d8-gf3-reflections", "heis-gf4", "q8-gf3",
                            "w3-gf4"):
        continue
    a = lemma21_check(case["group"], case["action"], case["p"],
                      name=case["name"])
    b = cor22_check(case["group"], case["action"], case["p"],
                    name=case["name"])
    print("%-22s lemma21=%-9s cor22=%s" % (case["name"], a.status, b.status))
    for note in b.notes:
        print("   ", note)
