"""
Lyndon words, necklaces and gap numbers
=======================================

Binary Lyndon words of length d dividing n label the Z_n-orbits of faces
that carry first homology. The gap number of a word counts its blocks of
zeros.
"""
# %%
from rmac.arith import divisors
from rmac.words import (
    count_L,
    face_from_word,
    gap_number,
    lyndon_words,
    moreau_count,
    necklace_count,
)

for w in lyndon_words(6):
    print(w, "gap number", gap_number(w))

# %%
# Counting: Witt's identity and the necklace count.
n = 12
print("Σ d·|L_d| =", sum(d * moreau_count(d) for d in divisors(n)), "= 2^n =", 2**n)
print("necklaces of length", n, ":", necklace_count(n))
print("Lyndon words of length 12 by gap number:",
      {k: count_L(12, k) for k in range(0, 7)})

# %%
# A word of length d | n repeated n/d times marks the zeros of a face.
cls = face_from_word("001011", 6)
print("face:", cls.face)
print("orbit:", cls.orbit)
