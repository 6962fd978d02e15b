"""Big-integer backend for the exact recurrence.

gmpy2's ``mpz`` multiplies large operands several times faster than
Python's ``int``.  Set ``EGFASYM_PURE_PYTHON=1`` to force plain ints, e.g. to
benchmark the two paths against each other or when gmpy2 is missing.
"""

import os

BACKEND = "python"
mpz = int

if os.environ.get("EGFASYM_PURE_PYTHON", "").lower() not in ("1", "true", "yes"):
    try:
        from gmpy2 import mpz  # noqa: F811

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover
        pass
