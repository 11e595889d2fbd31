"""CSV, fixed-width text, ANSI and SVG views of matrices and tables.

All emitters are pure: identical inputs produce byte-identical output.
CSV is the interchange format and parse_csv inverts it exactly; the SVG
emitter reproduces the color-coded table figures; the ANSI view is for
terminals.
"""

from dataclasses import dataclass

from .matrices import ResidueMatrix
from .tables import DeterminantTable, SignClass, sign_classify

__all__ = [
    "ColorScheme",
    "DEFAULT_SCHEME",
    "matrix_text",
    "emit_csv",
    "parse_csv",
    "table_text",
    "emit_ansi",
    "emit_svg",
]

RGB = "tuple[int, int, int]"


@dataclass(frozen=True)
class ColorScheme:
    """Fill colors per sign class; defaults are blue / orange / green."""

    zero: tuple = (59, 117, 196)
    negative: tuple = (230, 126, 34)
    positive: tuple = (46, 139, 87)

    def __post_init__(self) -> None:
        for rgb in (self.zero, self.negative, self.positive):
            if len(rgb) != 3 or any(not isinstance(x, int) or not 0 <= x <= 255 for x in rgb):
                raise ValueError(f"not an RGB triple: {rgb!r}")
        if len({self.zero, self.negative, self.positive}) != 3:
            raise ValueError("scheme colors must be pairwise distinct")

    def for_sign(self, s: SignClass) -> tuple:
        if s is SignClass.ZERO:
            return self.zero
        return self.negative if s is SignClass.NEGATIVE else self.positive


DEFAULT_SCHEME = ColorScheme()

_GLYPHS = {SignClass.ZERO: "0", SignClass.NEGATIVE: "-", SignClass.POSITIVE: "+"}


def matrix_text(matrix: ResidueMatrix) -> str:
    """One line per row, entries space-separated."""
    return "\n".join(" ".join(str(v) for v in row) for row in matrix.rows())


def emit_csv(table: DeterminantTable) -> str:
    """Grid as CSV: corner cell ``n\\c``, shifts across, orders down.
    Every line is newline-terminated and carries no trailing delimiter."""
    lines = ["n\\c," + ",".join(str(c) for c in table.shifts())]
    for n in table.orders():
        lines.append(str(n) + "," + ",".join(str(table.cells[n, c]) for c in table.shifts()))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> dict[tuple[int, int], int]:
    """Exact inverse of emit_csv, returning the {(n, c): value} cells."""
    lines = [line for line in text.split("\n") if line]
    if not lines:
        raise ValueError("empty table CSV")
    head = lines[0].split(",")
    if head[0] != "n\\c":
        raise ValueError("missing n\\c corner cell; not a determinant-table CSV")
    shifts = [int(tok) for tok in head[1:]]
    cells: dict[tuple[int, int], int] = {}
    for line in lines[1:]:
        tokens = line.split(",")
        n = int(tokens[0])
        if len(tokens) != len(shifts) + 1:
            raise ValueError(f"row n={n} has {len(tokens) - 1} cells, expected {len(shifts)}")
        for c, tok in zip(shifts, tokens[1:]):
            cells[n, c] = int(tok)
    return cells


def _layout(table: DeterminantTable):
    """Shared geometry for the text and ANSI grids: a single cell width
    wide enough for every label and value keeps both views aligned."""
    shifts = [str(c) for c in table.shifts()]
    orders = [str(n) for n in table.orders()]
    values = [[str(table.cells[n, c]) for c in table.shifts()] for n in table.orders()]
    width = max(len(s) for s in ["n\\c", *shifts, *orders, *(v for row in values for v in row)])
    return width, shifts, orders, values


def table_text(table: DeterminantTable) -> str:
    """Fixed-width numeric grid with order and shift labels."""
    width, shifts, orders, values = _layout(table)
    lines = ["  ".join(s.rjust(width) for s in ["n\\c", *shifts])]
    for label, row in zip(orders, values):
        lines.append("  ".join(s.rjust(width) for s in [label, *row]))
    return "\n".join(lines) + "\n"


def emit_ansi(table: DeterminantTable, scheme: ColorScheme = DEFAULT_SCHEME, color: bool = True) -> str:
    """The table_text grid with sign-colored cell backgrounds. With
    color=False each cell shows its sign glyph (0 / - / +) instead, same
    geometry, no escape codes."""
    width, shifts, orders, values = _layout(table)
    lines = ["  ".join(s.rjust(width) for s in ["n\\c", *shifts])]
    for n, label, row in zip(table.orders(), orders, values):
        out = [label.rjust(width)]
        for c, text in zip(table.shifts(), row):
            s = sign_classify(table.cells[n, c])
            if color:
                r, g, b = scheme.for_sign(s)
                out.append(f"\x1b[48;2;{r};{g};{b}m{text.rjust(width)}\x1b[0m")
            else:
                out.append(_GLYPHS[s].rjust(width))
        lines.append("  ".join(out))
    return "\n".join(lines) + "\n"


def _hex(rgb: tuple) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def emit_svg(table: DeterminantTable, scheme: ColorScheme = DEFAULT_SCHEME, cell_px: int = 12) -> str:
    """One sign-colored rectangle per cell, orders running downward and
    shifts rightward; each rectangle carries its exact value as hover
    text. Output bytes are a pure function of the inputs."""
    if cell_px < 1:
        raise ValueError(f"cell_px must be >= 1, got {cell_px}")
    n_lo, n_hi = table.n_range
    c_lo, c_hi = table.c_range
    w = (c_hi - c_lo + 1) * cell_px
    h = (n_hi - n_lo + 1) * cell_px
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    ]
    for n in table.orders():
        y = (n - n_lo) * cell_px
        for c in table.shifts():
            x = (c - c_lo) * cell_px
            v = table.cells[n, c]
            fill = _hex(scheme.for_sign(sign_classify(v)))
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell_px}" height="{cell_px}" fill="{fill}">'
                f"<title>n={n} c={c}: {v}</title></rect>"
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
