"""
Run-sorting in one sitting: runs, the sort itself, and the statistics
that the rest of the package revolves around.
"""
from rslab import perms

sigma = perms.parse_perm("2,9,7,3,6,8,5,1,4")
print("sigma          :", perms.format_perm(sigma))
print("runs           :", " | ".join(",".join(map(str, r)) for r in perms.runs(sigma)))
print("runsort(sigma) :", perms.format_perm(perms.runsort(sigma)))
print()

# A word with repeated letters works the same way; runs increase weakly.
word = tuple(int(c) for c in "1011011100011")
print("binary word    :", "".join(map(str, word)))
print("its runs       :", " | ".join("".join(map(str, r)) for r in perms.runs(word)))
print("run-sorted     :", "".join(map(str, perms.runsort(word))))
print()

pi = perms.parse_perm("1,3,7,4,6,2,5")
print("pi             :", perms.format_perm(pi))
print("descent set    :", perms.format_int_set(perms.descent_set(pi)))
print("peak values    :", perms.format_int_set(perms.peak_values(pi)))
print("major index    :", perms.maj(pi))
print()

# The sorted peak values are the peaks *after* run-sorting; the slope set
# marks where a new maximum could be inserted to become a fresh peak.
tau = perms.parse_perm("2,5,6,1,7,3,4")
print("tau            :", perms.format_perm(tau))
print("runsort(tau)   :", perms.format_perm(perms.runsort(tau)))
print("sorted peaks   :", perms.format_int_set(perms.spv(tau)))
print("run starts     :", perms.format_int_set(perms.run_starts(tau)))
print("slope set      :", perms.format_int_set(perms.slope_set(tau)))
print()

# Run-sorted permutations are exactly the fixed points of the sort.
fixed = list(perms.enumerate_runsorted(5))
print(f"run-sorted permutations of [5] ({len(fixed)} of them):")
for p in fixed:
    print("   ", perms.format_perm(p))
