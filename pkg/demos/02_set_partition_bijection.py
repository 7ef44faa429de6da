"""
Set partitions of [n] correspond to run-sorted permutations of [n+1]:
rotate each block's minimum to the back, shift up, prepend a 1.  The
descent set of the image can be read straight off the partition.
"""
from rslab import bijections as bj
from rslab import perms

p = bj.parse_set_partition("1258|3|47|6")
print("partition      :", bj.format_set_partition(p))
sigma = bj.partition_to_runsorted(p)
print("image          :", perms.format_perm(sigma))
print("back again     :", bj.format_set_partition(bj.runsorted_to_partition(sigma)))
print()

q = bj.parse_set_partition("18|27|3|46|5")
tau = bj.partition_to_runsorted(q)
print("partition      :", bj.format_set_partition(q))
print("image          :", perms.format_perm(tau))
print("descents (from partition):", perms.format_int_set(bj.partition_descents(q)))
print("descents (recomputed)    :", perms.format_int_set(perms.descent_set(tau)))
print()

# Blocks of size >= 2 each contribute one run beyond the run holding the
# leading 1 -- count them against the runs of the image.
for part in [p, q]:
    sigma = bj.partition_to_runsorted(part)
    big = sum(1 for b in part if len(b) >= 2)
    print(
        f"{bj.format_set_partition(part):<18} big blocks = {big},",
        f"runs of image = {len(perms.runs(sigma))}",
    )
print()

count = sum(1 for _ in bj.enumerate_set_partitions(5))
image = {bj.partition_to_runsorted(part) for part in bj.enumerate_set_partitions(5)}
print(f"partitions of [5]: {count}; distinct images: {len(image)};")
print(f"run-sorted permutations of [6]: {len(list(perms.enumerate_runsorted(6)))}")
