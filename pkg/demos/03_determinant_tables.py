"""
Determinant tables across every order and shift
===============================================

Fixing a prime and a matrix family, the determinant becomes a function
of the order n and the shift c.  Tabulating it over n = 1..p and two
full periods of c makes the patterns visible: a constant 1 band, the
alternating c = 0 column, the interior sea of zeros, and the p - 1
spikes along the bottom row.
"""

from pathlib import Path

from cubres import emit_csv, emit_svg, generate_table, table_text

p = 11
table = generate_table("diff", p)
print(f"difference family determinants for p = {p}:")
print(table_text(table))

print("\ncolumn c = 0 alternates in sign and grows linearly:")
print(" ", table.column(0))

print("\nrow n = p is constant p - 1 away from c = 0 mod p:")
print(" ", table.row(p))

# Orders beyond p repeat rows of the matrix, so the determinant dies.
ext = generate_table("diff", p, extended=True)
band = [ext.row(n) for n in range(p + 1, p + 11)]
print("\nextended rows n = p+1 .. p+10 are identically zero:",
      all(v == 0 for row in band for v in row))

# The emitters are deterministic, so regenerating gives identical bytes.
out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)
(out / f"diff_p{p}.csv").write_text(emit_csv(table))
(out / f"diff_p{p}.svg").write_text(emit_svg(table, cell_px=16))
print(f"\nwrote {out / f'diff_p{p}.csv'} and {out / f'diff_p{p}.svg'}")
