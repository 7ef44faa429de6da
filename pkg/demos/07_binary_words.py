"""
Run-sorted binary words: the biword encoding, the reverse-complement
symmetry and its partition-shaped fixed points, and the count identities
against the pair-product generating function and joint major indices.
"""
from rslab import binwords as bw

w = "00011011011101111"
print("word       :", w)
print("runs       :", " | ".join(bw.bw_runs(w)))
biw = bw.word_to_biword(w)
print("biword     :", biw.to_json())
print("row sums   :", biw.row_sums())
print()

g = bw.rc_runsort(w)
print("reverse-complement, re-sorted:", g)
print("its biword :", bw.word_to_biword(g).to_json(), "(rows swapped, columns resorted)")
print("applying it twice returns the word:", bw.rc_runsort(g) == w)
print()

print("symmetric words with 5 zeros and 5 ones <-> partitions of 5:")
for word in bw.symmetric_fixed_words(5):
    print(f"  {word}  <->  {bw.fixed_word_to_partition(word)}")
print()

print("counts with a zeros, b ones (rows a=0..6, cols b=0..6):")
table = bw.product_count_table(6, 6)
for a in range(7):
    row = [bw.count_runsorted_words(a, b) for b in range(7)]
    print(" ", row, " product formula:", table[a])
print("  (the pure words 0^a and 1^b sit outside the positive-pair product)")
print()

print("joint major-index counts match the product coefficients:")
for a, b in [(2, 2), (3, 4), (5, 5)]:
    print(f"  maj pair ({a},{b}): {bw.maj_pair_count(a, b)}  product: {table[a][b]}")
print()

rep = bw.roselle_identity_check(4, 6, 6)
print("two-sided major-index product identity at orders (z,q,t)=(4,6,6):", rep["ok"])
print()

print("descents after run-sorting, length 6 words:", bw.binary_descent_poly(6).human())
print("expected value at n=6:", bw.expected_binary_descents(6))
