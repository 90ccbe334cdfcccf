"""Exact Inonu-Wigner contractions, dual real forms and deformation families.

All structured data crosses the boundary as JSON text in the same schemas the
command line tool uses (lie-algebra/v1, involution/v1, family/v1); scalars are
exact rational strings such as "-3/4".
"""

from ._liefam import (
    SchemaError,
    catalog,
    contract,
    dualize,
    dualize_so,
    family,
    family_so,
    fiber,
    fingerprint,
    fingerprint_equal,
    gcontract,
    structurally_equal,
    validate,
    verify,
)

__all__ = [
    "SchemaError",
    "catalog",
    "contract",
    "dualize",
    "dualize_so",
    "family",
    "family_so",
    "fiber",
    "fingerprint",
    "fingerprint_equal",
    "gcontract",
    "structurally_equal",
    "validate",
    "verify",
]
