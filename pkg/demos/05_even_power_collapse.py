"""
When an even-power matrix collapses to all ones
===============================================

Take p = 3k+2, a primitive root r, and the family ((j - i)**(2t) + c).
Shift by c = r**e and every entry of the matrix can become 1 at once:
the argument is forced through the cubes for every i, j.  Which
exponents e work splits by p mod 12, because -1 is a square exactly
when p = 12k+5 here.
"""

from cubres import (
    EvenPowerPlusC,
    build_matrix,
    check_t3_7,
    primitive_root,
    report_text,
)

# Order 9 is wide enough that a shift outside the claimed class always
# exposes a zero entry; smaller matrices can miss it by accident.
for p in (17, 23):
    r = primitive_root(p)
    cls = p % 12
    parity = "odd" if cls == 5 else "even"
    print(f"p = {p} (12k+{cls}), primitive root {r}: {parity} exponents collapse")
    for e in range(1, 7):
        c = pow(r, e, p)
        m = build_matrix(EvenPowerPlusC(1, c), p, 9)
        flat = all(v == 1 for row in m.rows() for v in row)
        marker = "<- claimed" if e % 2 == (1 if cls == 5 else 0) else ""
        print(f"  e={e}  c={c:2d}  all ones: {str(flat):5s} {marker}")
    print()

# The checker sweeps every valid exponent, t = 1..3, orders 2..8, and
# repeats a spot check with a second primitive root.
print(report_text([check_t3_7(29, t_max=3, n_max=8)]))
