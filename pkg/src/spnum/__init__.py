"""Square-prime numbers (p * a^2, p prime, a >= 2) and their relatives.

Subpackages cover exact classification, counting by sieve-backed censuses,
analytic size estimates with certified error bounds, Pell-equation machinery,
and the explicit constructions (gap witnesses, x^2 + 1 and x^3 + 1 families,
between-squares and two-term sum decompositions).
"""

__version__ = "0.1.0"
