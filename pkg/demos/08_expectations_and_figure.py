"""
Expectation identities and the reproducible scatter of a run-sorted
random permutation (the data behind the limit-shape question).
"""
import tempfile
from pathlib import Path

from rslab import stats as st

print("expected descents of a uniform permutation:")
for n in range(2, 9):
    exact = st.expected_descents(n)
    brute = st.expected_descents_by_enumeration(n)
    print(f"  n={n}: {exact}  (enumeration: {brute})")
print()

print("expected peaks = expected descents after run-sorting:")
for n in range(2, 8):
    ways = st.expected_peaks_three_ways(n)
    print(f"  n={n}: {ways['formula']}  "
          f"(peaks: {ways['enumeration_peaks']}, sorted descents: "
          f"{ways['enumeration_sorted_descents']}, derivative: {ways['poly_derivative']})")
print()

print("permutations whose run-sorted image descends at position 2:")
print(" ", st.descent_at_two_sequence(9))
print("  closed form at n=5:", st.descent_at_two_closed(5))
print("  enumeration at n=5:", st.descent_at_two_by_enumeration(5))
print()

for sid in sorted(st.GOLDEN):
    rep = st.golden_check(sid)
    print(f"golden {sid}: ok={rep['ok']}")
print()

out = Path(tempfile.gettempdir()) / "runsorted_scatter.csv"
out.write_text(st.figure_csv(20000, seed=1))
lines = out.read_text().splitlines()
print("scatter written to", out)
print("  header:", lines[0])
print("  first rows:", lines[1:4])
print("  rerun is byte-identical:", st.figure_csv(20000, seed=1) == out.read_text())
