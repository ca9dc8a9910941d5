"""
Commutator traces of the standard SL2(q) pair
=============================================

For x = [[0,1],[-1,t]] and y = [[t,1],[-1,0]] the checker asserts that
tr[x,y] = t + 3 at every t in GF(q).  The verdicts below report what the
arithmetic actually gives: the observed trace is 4t^2 + 2, which meets
t + 3 only at roots of 4t^2 - t - 1.  The witnesses make the disagreement
replayable value by value.

The second scan conjugates x by the torus element diag(s, 1/s) and
interpolates s^4 * tr[x, x^g(s)] through every nonzero s: a polynomial of
degree at most 8, whatever x is.
"""

from bfl import GF, SquareMatrix
from bfl.verify import (l2q_laurent_profile, l2q_laurent_scan,
                        l2q_trace_identity)

for q in (3, 5, 7, 9, 11, 13):
    v = l2q_trace_identity(q)
    print("q=%-3d %s  mismatches %d/%d" % (q, v.display_status,
                                           v.counters["mismatches"],
                                           v.counters["t_values"]))
    if v.notes:
        print("   ", v.notes[-1])

# the full mismatch table for one small field
print()
v = l2q_trace_identity(7)
print("GF(7):  t  asserted  observed")
for w in v.witnesses:
    print("       %2d     %2d       %2d" % (w["t"], w["expected"], w["trace"]))

# torus-conjugate scan: 100 seeded x per field, plus two profiles spelled out
print()
for q in (11, 13):
    v = l2q_laurent_scan(q, samples=100, seed=0xBF)
    print("q=%-3d %s  max degree %d over %d points per x"
          % (q, v.display_status, v.counters["max_degree"],
             v.counters["points_per_x"]))

F = GF(11)
x = SquareMatrix(F, [[0, 1], [10, 4]])            # the t=4 standard element
poly, degree = l2q_laurent_profile(11, x)
print()
print("GF(11), t=4: s^4 * tr[x, x^g(s)] =",
      " + ".join("%d s^%d" % (c, k) for k, c in enumerate(poly) if c),
      "(degree %d)" % degree)
