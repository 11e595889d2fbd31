"""
A gallery of symbol matrices
============================

Each matrix family fills entry (i, j) with the cubic residue symbol of a
small polynomial in i and j.  Difference matrices are Toeplitz, sum
matrices are Hankel, and for 3k+2 primes each has striking structure.
"""

from cubres import (
    CubeDiffPlusOne,
    DiffPlusC,
    EvenPowerPlusC,
    SumPlusC,
    build_matrix,
    determinant,
    matrix_text,
)

p = 11

print(f"difference family [(j - i + c)/{p}], order 6:")
for c in (0, 1, 4):
    m = build_matrix(DiffPlusC(c), p, 6)
    print(f"\nc = {c}, det = {determinant(m)}")
    print(matrix_text(m))

print(f"\nsum family [(j + i + 2)/{p}], order 6:")
m = build_matrix(SumPlusC(2), p, 6)
print(matrix_text(m))
print("det =", determinant(m))

# For 3k+2 primes the cube in ((j-i)**3 + 1) collapses, so this matrix
# equals the difference matrix at c = 1 entry for entry.
print(f"\ncube-difference family [((j - i)**3 + 1)/{p}], order 6:")
m_cube = build_matrix(CubeDiffPlusOne(), p, 6)
m_diff = build_matrix(DiffPlusC(1), p, 6)
print(matrix_text(m_cube))
print("equals difference matrix at c=1:", m_cube.rows() == m_diff.rows())

# Even powers of (j - i) land in the squares; shifting by a suitable
# power of a primitive root can push every argument into the cubes.
print(f"\neven-power family [((j - i)**2 + 3)/17], order 5:")
m = build_matrix(EvenPowerPlusC(1, 3), 17, 5)
print(matrix_text(m))
