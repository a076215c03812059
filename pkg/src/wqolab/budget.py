"""Bit-budget guards for arbitrary-precision arithmetic.

Every value-producing operation takes an explicit budget: the maximum bit
length any produced integer may have.  Exceeding the budget raises
``BudgetExceeded``; values are never silently truncated.  The guards are
conservative (they may refuse slightly before the exact limit) but cheap,
so towers and iterated powers fail fast instead of allocating huge ints.
"""

from __future__ import annotations

from .errors import BudgetExceeded


def check_bits(value: int, budget: int | None) -> int:
    if budget is not None and value.bit_length() > budget:
        raise BudgetExceeded(f"value needs {value.bit_length()} bits, budget is {budget}")
    return value


def checked_pow(base: int, exponent: int, budget: int | None) -> int:
    """``base ** exponent`` with a pre-check on the result's bit length."""
    if base < 0 or exponent < 0:
        raise ValueError("checked_pow expects nonnegative operands")
    if budget is not None and base > 1:
        # bits(base**exponent) <= exponent * bits(base)
        if exponent * base.bit_length() > budget:
            raise BudgetExceeded(
                f"{base}**{exponent} needs about {exponent * base.bit_length()} bits, budget is {budget}"
            )
    return check_bits(base**exponent, budget)


def checked_mul(a: int, b: int, budget: int | None) -> int:
    if budget is not None and a.bit_length() + b.bit_length() > budget + 1:
        raise BudgetExceeded(f"product needs about {a.bit_length() + b.bit_length()} bits, budget is {budget}")
    return check_bits(a * b, budget)
