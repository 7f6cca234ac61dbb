# From a curve on the genus two surface to a lens space.
#
# Run with:  python demos/surgery_walkthrough.py

from lensknots import (
    HomologyCoordinates, KnotDescriptor, abelianization, coords_of, format_word,
    surgery_lens_space, word_of,
)

# A curve is recorded by its homology class (A, B, a, b). Surgery gives
# L(p, q) with p = |Aa + Bb|; the dual knot's class lambda comes along with it.

c = HomologyCoordinates(5, 3, 7, -1)
r = surgery_lens_space(c)
print(c, "->", r.space, "lambda =", r.lam)

# The raw values are kept too. Only the orbit {x, -x, 1/x, -1/x} mod p
# matters, and the canonical value is its minimum.

print("raw q =", r.q_raw, " raw lambda =", r.lambda_raw, " canonical q =", r.space.q)

# Those coordinates are the first member of the sporadic family a).

d = KnotDescriptor.of("sporadic-a", J=1)
print(d, "coords", tuple(coords_of(d)))

# Each non-fiber family also spells its knot as a word in A and B.
# Exponent sums of the word recover (A, B).

for J in range(4):
    d = KnotDescriptor.of("sporadic-a", J=J)
    w = word_of(d)
    print(f"J={J}  {format_word(w):<40} sums={abelianization(w)}  {surgery_lens_space(coords_of(d)).space}")

# Twisting a type III knot (changing K) moves p along a line with slope B^2.

for K in range(-2, 3):
    d = KnotDescriptor.of("type-iii", J=1, n=1, eps=1, a=1, K=K)
    res = surgery_lens_space(coords_of(d))
    print(f"K={K:+d}  coords={tuple(coords_of(d))}  {res.space}  lambda={res.lam}")
