"""Exact closed forms for path counts, hump totals and related identities.

Everything is integer arithmetic. Quotients that are known to be exact go
through :func:`exact_div`, which raises instead of rounding.
"""
from __future__ import annotations

import threading

from .paths import PathError

__all__ = [
    "DomainError",
    "exact_div",
    "binomial",
    "catalan",
    "motzkin",
    "schroeder",
    "narayana",
    "narayana_via_lemma",
    "pd",
    "sd",
    "sm",
    "hm",
    "sd_class_count",
    "ss",
    "hs",
    "schid_sides",
]


class DomainError(PathError):
    pass


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k is outside 0..n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result is C(n - k + i - 1, i - 1) here, so the division is exact.
        result = result * (n - k + i) // i
    return result


def catalan(n: int) -> int:
    return exact_div(binomial(2 * n, n), n + 1)


_motzkin_table = [1, 1]
_motzkin_lock = threading.Lock()


def motzkin(n: int) -> int:
    """m_n from m_n = m_{n-1} + sum_{i=2..n} m_{i-2} m_{n-i}, m_0 = m_1 = 1."""
    if n < 0:
        raise DomainError(f"motzkin needs n >= 0, got {n}")
    with _motzkin_lock:
        table = _motzkin_table
        while len(table) <= n:
            j = len(table)
            table.append(table[j - 1] + sum(table[i - 2] * table[j - i] for i in range(2, j + 1)))
        return table[n]


def schroeder(n: int) -> int:
    """Large Schroeder number: a Dyck path of order k with n - k flats inserted."""
    return sum(binomial(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")


def narayana(n: int, k: int) -> int:
    _check_nk(n, k)
    return exact_div(binomial(n, k) * binomial(n, k - 1), n)


def narayana_via_lemma(n: int, k: int) -> int:
    """N(n, k) recovered from the super Dyck class counts.

    The k marks on a k-peak Dyck path map onto the UD class with k peaks and
    the UU class with k - 1 peaks, so k N(n, k) is the sum of the two.
    """
    _check_nk(n, k)
    ud = binomial(n - 1, k - 1) ** 2
    uu = binomial(n - 1, k - 2) * binomial(n - 1, k - 1)
    return exact_div(ud + uu, k)


def pd(n: int) -> int:
    """Total peaks over Dyck paths of order n; pd(0) = 0."""
    if n < 0:
        raise DomainError(f"pd needs n >= 0, got {n}")
    return binomial(2 * n - 1, n) if n else 0


def sd(n: int) -> int:
    return binomial(2 * n, n)


def sm(n: int) -> int:
    return sum(binomial(n, j) * binomial(n - j, j) for j in range(n // 2 + 1))


def hm(n: int) -> int:
    return exact_div(sm(n) - 1, 2)


def sd_class_count(n: int, k: int, cls: str = "any") -> int:
    """Super Dyck paths of order n with k peaks in a first/last step class.

    ``cls`` is ``"UD"`` (first U, last D), ``"UU"`` (first and last U) or
    ``"any"``.
    """
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    if cls == "UD":
        return binomial(n - 1, k - 1) ** 2
    if cls == "UU":
        return binomial(n - 1, k - 1) * binomial(n - 1, k)
    if cls == "any":
        return binomial(n, k) ** 2
    raise DomainError(f"unknown class {cls!r}")


def ss(n: int) -> int:
    return sum(binomial(n + k, 2 * k) * binomial(2 * k, k) for k in range(n + 1))


def hs(n: int) -> int:
    return exact_div(ss(n) - 1, 2)


def schid_sides(n: int, m: int) -> tuple[int, int]:
    """Both sides of sum C(n,k)^2 (m+1)^k = sum C(n+k,2k) C(2k,k) m^(n-k)."""
    if n < 0 or m < 0:
        raise DomainError(f"need n, m >= 0, got n={n}, m={m}")
    lhs = sum(binomial(n, k) ** 2 * (m + 1) ** k for k in range(n + 1))
    rhs = sum(binomial(n + k, 2 * k) * binomial(2 * k, k) * m ** (n - k) for k in range(n + 1))
    return lhs, rhs
