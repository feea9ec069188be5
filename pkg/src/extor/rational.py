"""Exact rational scalars.

Every computation in this package is exact over Q.  `gmpy2.mpq` is used when
available (it is a drop-in, much faster implementation of the same value
semantics: always reduced, denominator > 0); otherwise `fractions.Fraction`.
Set EXTOR_PURE_RATIONAL=1 to force the stdlib type.
"""

import os

if os.environ.get("EXTOR_PURE_RATIONAL") == "1":
    from fractions import Fraction as Rational
else:
    try:
        from gmpy2 import mpq as Rational
    except ImportError:  # pragma: no cover - exercised only without gmpy2
        from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)


def rat(numerator, denominator=1):
    """Build a rational in lowest terms with positive denominator."""
    return Rational(numerator, denominator)
