"""
Cubic residue symbols, cube roots, and how the two prime classes differ
=======================================================================

The symbol [a/p] is 0 when p divides a, 1 when a is a nonzero cube mod p,
and -1 otherwise.  Which values occur depends entirely on p mod 3.
"""

from cubres import cube_root, cubic_residue_set, cubic_residue_symbol, odd_primes_up_to

# A few hand-checkable values.  12 = 4**3 mod 13, so the symbol is 1.
for a, p in [(12, 13), (2, 7), (0, 7), (5, 11)]:
    s = cubic_residue_symbol(a, p)
    witness = cube_root(a, p)
    extra = f"  (cube root {witness})" if s == 1 else ""
    print(f"[{a}/{p}] = {s:2d}{extra}")

print()

# For p = 3k+1 exactly a third of the nonzero classes are cubes; for
# p = 3k+2 cubing permutes the nonzero classes so everything is a cube.
for p in odd_primes_up_to(40):
    cubes = cubic_residue_set(p)
    kind = "3k+1" if p % 3 == 1 else ("3k+2" if p % 3 == 2 else "p=3 ")
    print(f"p={p:2d} ({kind}): {len(cubes):2d} nonzero cubes  {sorted(cubes)}")

print()

# The symbol only sees a mod p, and [-a/p] = [a/p] because -1 = (-1)**3.
p = 11
print("periodicity and negation at p=11:")
print("  [7/11] =", cubic_residue_symbol(7, 11))
print("  [18/11] =", cubic_residue_symbol(18, 11))
print("  [-7/11] =", cubic_residue_symbol(-7, 11))
