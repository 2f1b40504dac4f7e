"""Exact counting formulas for sojourn-classified walk paths of length 2n.

Everything here is arbitrary-precision: the central binomial coefficient
passes 2**63 before 2n reaches 70, and probabilities stay exact rationals.
Each division below is exact by an integrality fact of Catalan type, so a
nonzero remainder can only mean a bug; it raises ExactDivisionError rather
than silently rounding.

The counting identities, writing k for half the sojourn time:

  all paths by sojourn         C(2k, k) * C(2n-2k, n-k)
  bridges by sojourn           C(2n, n) / (n+1)           (independent of k)
  positive end by sojourn      (k/n) * C(2k, k) * C(2n-2k, n-k)

and the positive-end count decomposes over the last visit to the origin as

  sum over l in [1, k] of  Cat(n-l) * 2 * C(2l-2, l-1)

with Cat the Catalan numbers.  Among paths with sojourn time 2k, the chance
of finishing on the positive side is exactly k/n.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .core import PathClass


class ExactDivisionError(ArithmeticError):
    """An exact-arithmetic invariant failed; this is a bug, never bad input."""


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactDivisionError(f"{numerator} is not divisible by {denominator}")
    return quotient


def binomial(a: int, b: int) -> int:
    """C(a, b), with C(a, b) = 0 whenever b < 0 or b > a."""
    if a < 0:
        raise ValueError("upper index must be nonnegative")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_half_indices(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")


def count_all(steps: int) -> int:
    """Number of paths of the given length: 2**steps."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    return 2 ** steps


def count_bridges(steps: int) -> int:
    """Number of paths returning to the origin: C(steps, steps/2), 0 when odd."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if steps % 2:
        return 0
    return binomial(steps, steps // 2)


def count_by_sojourn(n: int, k: int) -> int:
    """Paths of length 2n with sojourn time 2k: C(2k, k) * C(2n-2k, n-k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    return binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k)


def count_bridges_by_sojourn(n: int, k: int) -> int:
    """Bridges of length 2n with sojourn time 2k: C(2n, n) / (n+1), any k.

    The count is the same for every k in [0, n], which is what makes the
    bridge-conditioned sojourn time exactly uniform.
    """
    _check_half_indices(n, k)
    return _exact_div(binomial(2 * n, n), n + 1)


def count_positive_end_by_sojourn(n: int, k: int) -> int:
    """Positive-end paths of length 2n with sojourn time 2k: (k/n) * C(2k,k) * C(2n-2k,n-k)."""
    _check_half_indices(n, k)
    return _exact_div(k * count_by_sojourn(n, k), n)


@lru_cache(maxsize=None)
def _decomposition_term(n: int, l: int) -> int:
    """One term of the decomposed positive-end count: 2 * Cat(n-l) * C(2l-2, l-1).

    The term depends on l but not on k, so the partial sums over l build the
    whole row of positive-end counts; caching it makes full-row sweeps cheap.
    """
    return _exact_div(binomial(2 * n - 2 * l, n - l), n - l + 1) * 2 * binomial(2 * l - 2, l - 1)


def count_positive_end_by_sojourn_sum(n: int, k: int) -> int:
    """The positive-end count computed as a sum of Catalan-binomial terms.

    An independent route to count_positive_end_by_sojourn for k in [1, n]:
    sum over l in [1, k] of 2 * Cat(n-l) * C(2l-2, l-1).  The verification
    sweep checks the two routes against each other cell by cell.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    return sum(_decomposition_term(n, l) for l in range(1, k + 1))


def conditional_positive_probability(n: int, k: int) -> Fraction:
    """Probability of finishing on the positive side given sojourn time 2k: exactly k/n."""
    _check_half_indices(n, k)
    return Fraction(k, n)


def sojourn_pmf(n: int, path_class: PathClass) -> dict[int, Fraction]:
    """Exact distribution of half the sojourn time over paths of length 2n.

    Normalizers: 4**n for all paths, C(2n, n) for bridges, and 2**(2n-1)
    for positive-end paths (exactly half of all paths finish on the
    positive side).  The counts are verified to sum to the normalizer.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if path_class is PathClass.ALL:
        counts = [count_by_sojourn(n, k) for k in range(n + 1)]
        total = 4 ** n
    elif path_class is PathClass.BRIDGE:
        counts = [count_bridges_by_sojourn(n, k) for k in range(n + 1)]
        total = binomial(2 * n, n)
    else:
        counts = [count_positive_end_by_sojourn(n, k) for k in range(n + 1)]
        total = 2 ** (2 * n - 1)
    if sum(counts) != total:
        raise ExactDivisionError(f"class counts do not sum to the exact normalizer at n={n}")
    return {k: Fraction(c, total) for k, c in enumerate(counts)}


def decimal_string(value: Fraction | int, digits: int = 12) -> str:
    """Render an exact nonnegative rational as a plain decimal string.

    At most ``digits`` significant digits, rounded half to even, trailing
    zeros trimmed; integers render without a point.  No floats anywhere, so
    the output is reproducible to the last character.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    value = Fraction(value)
    if value < 0:
        raise ValueError("negative values are not rendered")
    num, den = value.numerator, value.denominator
    if num == 0:
        return "0"

    def at_least(exp: int) -> bool:
        # num/den >= 10**exp, in integers
        if exp >= 0:
            return num >= den * 10 ** exp
        return num * 10 ** (-exp) >= den

    # exponent e with 10**e <= value < 10**(e+1)
    e = len(str(num)) - len(str(den))
    if not at_least(e):
        e -= 1
    elif at_least(e + 1):
        e += 1

    shift = digits - 1 - e
    if shift >= 0:
        quotient, remainder = divmod(num * 10 ** shift, den)
        whole = den
    else:
        quotient, remainder = divmod(num, den * 10 ** (-shift))
        whole = den * 10 ** (-shift)
    if 2 * remainder > whole or (2 * remainder == whole and quotient % 2):
        quotient += 1
    if quotient == 10 ** digits:
        quotient //= 10
        e += 1

    text = str(quotient)
    if e >= digits - 1:
        out = text + "0" * (e - digits + 1)
    elif e >= 0:
        out = text[:e + 1] + "." + text[e + 1:]
    else:
        out = "0." + "0" * (-e - 1) + text
    if "." in out:
        out = out.rstrip("0").rstrip(".")
    return out
