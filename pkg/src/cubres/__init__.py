"""Cubic residue symbol matrices: exact integer determinants, pattern
tables, color-coded renderings, and an exhaustive identity-verification
harness, with a small CLI on top."""

from .determinant import determinant, determinant_oracle
from .matrices import (
    CubeDiffPlusOne,
    DiffPlusC,
    EvenPowerPlusC,
    Formula,
    ResidueMatrix,
    SumPlusC,
    build_matrix,
    entry_value,
    matrices_equal,
)
from .render import (
    DEFAULT_SCHEME,
    ColorScheme,
    emit_ansi,
    emit_csv,
    emit_svg,
    matrix_text,
    parse_csv,
    table_text,
)
from .residues import (
    Prime,
    as_prime,
    cube_root,
    cubic_residue_set,
    cubic_residue_symbol,
    is_prime,
    legendre_symbol,
    next_primitive_root,
    odd_primes_up_to,
    primitive_root,
)
from .tables import (
    FAMILIES,
    DeterminantTable,
    SignClass,
    family_formula,
    generate_table,
    sign_classify,
)
from .verify import (
    CLAIMS,
    Counterexample,
    TheoremReport,
    check_propositions,
    check_remark_n1,
    check_row_period_np,
    check_t3_1,
    check_t3_2,
    check_t3_3,
    check_t3_4,
    check_t3_5,
    check_t3_6,
    check_t3_7,
    check_table_period,
    report_lines,
    report_text,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "Prime",
    "as_prime",
    "is_prime",
    "odd_primes_up_to",
    "cubic_residue_symbol",
    "cubic_residue_set",
    "cube_root",
    "legendre_symbol",
    "primitive_root",
    "next_primitive_root",
    "DiffPlusC",
    "SumPlusC",
    "CubeDiffPlusOne",
    "EvenPowerPlusC",
    "Formula",
    "ResidueMatrix",
    "entry_value",
    "build_matrix",
    "matrices_equal",
    "determinant",
    "determinant_oracle",
    "FAMILIES",
    "SignClass",
    "sign_classify",
    "family_formula",
    "DeterminantTable",
    "generate_table",
    "ColorScheme",
    "DEFAULT_SCHEME",
    "matrix_text",
    "emit_csv",
    "parse_csv",
    "table_text",
    "emit_ansi",
    "emit_svg",
    "CLAIMS",
    "Counterexample",
    "TheoremReport",
    "check_propositions",
    "check_t3_1",
    "check_t3_2",
    "check_t3_3",
    "check_t3_4",
    "check_t3_5",
    "check_t3_6",
    "check_t3_7",
    "check_row_period_np",
    "check_table_period",
    "check_remark_n1",
    "verify_all",
    "report_lines",
    "report_text",
]
