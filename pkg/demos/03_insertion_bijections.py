"""
The two insertion bijections.  Inserting n after an anchor letter tracks
plain peak values for free; tracking peak values *after run-sorting*
occasionally needs a repair move first (swap_tail or flip_tails), and
this script walks through each repair on the worked examples.
"""
from rslab import bijections as bj
from rslab import perms

P = lambda s: tuple(int(c) for c in s)
fmt = lambda p: "".join(map(str, p))

# Case 4: the letter after the anchor is a sorted peak value.
sigma, pi = P("52674318"), P("38256714")
print("sorted peaks of", fmt(sigma), ":", perms.format_int_set(perms.spv(sigma)))
print("sorted peaks of", fmt(pi), ":", perms.format_int_set(perms.spv(pi)))
print("anchor 6 peak-admissible in sigma?", bj.is_peak_admissible(sigma, 6))
print("anchor 6 peak-admissible in pi?   ", bj.is_peak_admissible(pi, 6))
print("plain insert into sigma:", fmt(bj.insert_after(6, sigma)),
      "-> sorted peaks", perms.format_int_set(perms.spv(bj.insert_after(6, sigma))))
print("plain insert into pi:   ", fmt(bj.insert_after(6, pi)),
      "-> sorted peaks", perms.format_int_set(perms.spv(bj.insert_after(6, pi))),
      " (7 was supposed to drop out!)")
repaired = bj.swap_tail(6, pi)
print("swap_tail(6, pi) =", fmt(repaired),
      "-> insert:", fmt(bj.insert_after(6, repaired)),
      "-> sorted peaks", perms.format_int_set(perms.spv(bj.insert_after(6, repaired))))
print()

# Case 5: the anchor sits in the slope set and should hand the new
# maximum a fresh peak.  Residual pairs need the segment flip.
rho = P("83724561")
print("flip_tails(2,", fmt(rho), ") =", fmt(bj.flip_tails(2, rho)))
print("flipping twice returns it:", fmt(bj.flip_tails(2, bj.flip_tails(2, rho))))
print()

# The residual classes at one anchor, with their sizes.
census = bj.residual_census(7, 3)
print("residual census over S_7 at anchor 3:", {c: len(v) for c, v in census.items()})
print("class 2 members:", [fmt(p) for p in census[2]])
print("class 3 members:", [fmt(p) for p in census[3]])
print()

# Both bijections, all five cases, on one small permutation.
base = P("641325")
print("base:", fmt(base), " peaks:", perms.format_int_set(perms.peak_values(base)),
      " sorted peaks:", perms.format_int_set(perms.spv(base)))
for a in bj.anchor_labels(7):
    q1, c1 = bj.peak_insert(a, base)
    q2, c2 = bj.lex_peak_insert(a, base)
    label = "front" if isinstance(a, type(bj.FRONT)) else str(a)
    print(f"  anchor {label:>5}: plain case {c1} -> {fmt(q1)},  sorted case {c2} -> {fmt(q2)}")
