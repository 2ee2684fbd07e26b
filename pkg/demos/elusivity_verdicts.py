# Which transitive groups contain a derangement of prime order?
#
# A transitive group always contains a derangement (Jordan), but not
# necessarily one of prime order.  Groups without one are called elusive,
# and "2'-elusive" restricts the question to the odd primes dividing the
# degree.  This script walks through the verdicts the library produces,
# from brute force on small groups to structural reasoning on wreath
# products far too large to enumerate.

from derangements import (
    GroupAction, Permutation, PermGroup, WreathSpec, borel_subgroup,
    coset_action, count_order_r_elements, is_elusive, is_r_elusive,
    is_2prime_elusive, m11, mersenne_scenario, projective_line_action,
    semiregular_search, structural_wreath_elusivity, subgroup_search,
    wreath,
)

# M11 in its natural action on 11 points: an 11-cycle moves everything,
# so there is nothing elusive about it.
A11 = m11()
v = is_r_elusive(A11, 11)
print("M11 on 11 points, r=11:", v.status)
print("  witness:", v.witness.cycle_string())

# Move the same group to 12 points, acting on the cosets of a subgroup
# PSL(2,11) of index 12.  Now every element of prime order fixes a point:
# the smallest elusive group.
psl211 = PermGroup([
    Permutation.from_cycles(11, [(1, 7), (3, 5), (6, 10), (8, 9)]),
    Permutation.from_cycles(11, [(0, 6, 10), (1, 7, 2), (3, 5, 4)]),
    Permutation.from_cycles(11, [(0, 4), (1, 10), (2, 9), (3, 7)]),
])
A12 = coset_action(A11, psl211)
print("\nM11 on", A12.degree, "points (cosets of PSL(2,11)):")
report = is_elusive(A12)
print("  elusive:", report.aggregate)
for v in report.verdicts:
    print("  r=%d: %s  [%s, exact=%s]" % (v.prime, v.status, v.method, v.exact))

# Elusive groups in particular have no semiregular element of prime order
# (a fixed-point-free element all of whose cycles share one length).
sr = semiregular_search(A12)
print("  semiregular element of prime order:", sr.witness, "--", sr.note)

# Elusivity does not pass to transitive subgroups.  PSL(2,11) itself acts
# on the 12 points of the projective line, and there an involution is
# already a derangement (z -> -1/z has no fixed projective point since -1
# is not a square mod 11).
line = projective_line_action(11)
psl_line = GroupAction(line.subgroups["PSL"], line.point_labels,
                       "PSL(2,11) on the projective line")
v = is_r_elusive(psl_line, 2)
print("\nPSL(2,11) on 12 points, r=2:", v.status)
print("  witness:", v.witness.cycle_string())

# The 2'-aggregate only asks about odd primes dividing the degree.  M10 on
# 12 points (cosets of an A5, found here by a seeded random search) is
# 2'-elusive because 3 is the only odd prime dividing 12; it happens to be
# elusive outright as well.
line9 = projective_line_action(9)
a5 = subgroup_search(line9.subgroups["M10"], 60,
                     element_orders={1, 2, 3, 5}, require_simple=True)
m10 = coset_action(line9.subgroups["M10"], a5,
                   provenance="M10 on the cosets of A5")
print("\nM10 on", m10.degree, "points:")
rep = is_2prime_elusive(m10)
print("  2'-elusive:", rep.aggregate,
      "; odd primes checked:", [v.prime for v in rep.verdicts])
print("  r=2 as well:", is_r_elusive(m10, 2).status)

# Counting tells the same story as searching.  M11 on 12 points has 165
# involutions and every one of them fixes four points.
n2 = count_order_r_elements(A11.group, 2)
print("\nM11 has", n2, "involutions; none is a derangement at degree 12")

# The two notions genuinely differ.  PSL(2,127) acting on the 384 cosets
# of a subgroup of order 2667 (see the orbital graph demo for where this
# action comes from) has an order-2 derangement but no order-3 one, so it
# is 2'-elusive without being elusive.  Conjugacy classes carry the whole
# argument here: an order-r derangement exists iff some class of order-r
# elements has fixed-point count 0, and fixed-point counts are constant
# on classes.
line127 = projective_line_action(127)
psl127 = GroupAction(line127.subgroups["PSL"], line127.point_labels,
                     "PSL(2,127) on the projective line")
H = borel_subgroup(mersenne_scenario(127), "psl", 21)
a384 = coset_action(psl127, H)
print("\nPSL(2,127) on", a384.degree, "points:")
for r in (2, 3):
    v = is_r_elusive(a384, r)
    print("  r=%d: %s  [%s]" % (r, v.status, v.method))

# Wreath products in product action get decided structurally.  Form
# G wr C2 on 384^2 points from the same base group.  No stabilizer chain
# at degree 147456 is ever built: order-3 elements are analyzed
# coordinate-wise in the base group and the top group.
top2 = PermGroup([Permutation.from_cycles(2, [(0, 1)])])
spec = WreathSpec(a384, 2, top2, "product")
W = wreath(spec, declare_socle=False)
print("\nPSL(2,127) wr C2 in product action:")
print("  degree", W.degree, "; order", spec.order())
v3 = structural_wreath_elusivity(spec, 3)
print("  r=3:", v3.status, " [%s]" % v3.method)
rep = is_2prime_elusive(W)
print("  2'-elusive:", rep.aggregate,
      " [methods: %s]" % sorted({v.method for v in rep.verdicts}))
