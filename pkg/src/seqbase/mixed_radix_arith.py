"""Digit-wise arithmetic for pure mixed-radix bases, with a value-level fallback.

In a pure mixed-radix base (w_{i+1} = (t_i + 1) * w_i) position i adds and
subtracts at radix t_i + 1, so carries and borrows stay local.  Bases
without that structure (prime, square, ...) have no closed digit rule and
fall back to decode -> integer op -> re-encode; both paths agree wherever
both apply.  Multiplication and division are value-level only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .base_sequences import BaseSequence
from .codec import Representation, decode, encode_greedy, is_canonical
from .errors import (
    DivisionByZero,
    IndexBeyondCapacity,
    InvalidParameter,
    NotCanonical,
    Underflow,
)


@dataclass
class ArithTrace:
    """Filled in when passed as the `trace` argument of an arithmetic op.

    `path` records which route ran ("digitwise" or "decode"); `states` holds
    the working digit vector after each single borrow transfer, starting
    with the untouched minuend.
    """

    path: str = ""
    events: list[str] = field(default_factory=list)
    states: list[str] = field(default_factory=list)


def is_pure_mixed_radix(base: BaseSequence, upto: int) -> bool:
    """True when w_{i+1} = (digit_bound(i) + 1) * w_i for every i < upto."""
    if upto < 1:
        raise InvalidParameter(f"upto must be >= 1, got {upto}")
    for i in range(upto):
        if base.term(i + 1) != (base.digit_bound(i) + 1) * base.term(i):
            return False
    return True


def _same_base(x: Representation, y: Representation) -> BaseSequence:
    if x.base != y.base:
        raise InvalidParameter(f"operands use different bases: {x.base.name} vs {y.base.name}")
    return x.base


def _require_canonical(rep: Representation) -> None:
    if not is_canonical(rep):
        raise NotCanonical(f"operand is not canonical in base {rep.base.name}")


def _pure_upto(base: BaseSequence, upto: int) -> bool:
    if upto < 1:
        return True
    try:
        return is_pure_mixed_radix(base, upto)
    except IndexBeyondCapacity:
        return False  # missing successor weight: treat as not closed, fall back


def _dense(rep: Representation, width: int) -> list[int]:
    out = [0] * width
    for pos, d in rep.entries:
        out[pos] = d
    return out


def _state(digits_le: list[int], sep: str = ".") -> str:
    msd_first = digits_le[::-1]
    if all(d <= 9 for d in msd_first):
        return "".join(str(d) for d in msd_first)
    return sep.join(str(d) for d in msd_first)


def add(x: Representation, y: Representation, trace: ArithTrace | None = None) -> Representation:
    """Canonical sum of two canonical representations."""
    base = _same_base(x, y)
    _require_canonical(x)
    _require_canonical(y)
    n = max(x.top, y.top)
    if n >= 0 and _pure_upto(base, n + 1):
        if trace is not None:
            trace.path = "digitwise"
        a = _dense(x, n + 1)
        b = _dense(y, n + 1)
        out = []
        carry = 0
        for i in range(n + 1):
            radix = base.digit_bound(i) + 1
            carry_in = carry
            carry, d = divmod(a[i] + b[i] + carry_in, radix)
            out.append(d)
            if trace is not None:
                trace.events.append(
                    f"pos {i} (radix {radix}): {a[i]}+{b[i]}+{carry_in} -> digit {d} carry {carry}"
                )
        if carry:
            base.term(n + 1)  # the carried unit needs a real weight
            out.append(carry)
        return Representation.from_digits(base, out)
    if trace is not None:
        trace.path = "decode"
    return encode_greedy(base, decode(x) + decode(y))


def sub(x: Representation, y: Representation, trace: ArithTrace | None = None) -> Representation:
    """Canonical difference x - y of canonical representations (x >= y).

    On a pure mixed-radix base a failing position borrows from the nearest
    nonzero position to its left: each step moves one unit down, turning it
    into radix-many units of the next position, exactly the chain a hand
    calculation walks through.
    """
    base = _same_base(x, y)
    _require_canonical(x)
    _require_canonical(y)
    if y.top > x.top:
        # a canonical value is at least its top weight and below the next one
        raise Underflow(f"cannot subtract a larger value (top position {y.top} > {x.top})")
    n = x.top
    if n >= 0 and _pure_upto(base, n):
        if trace is not None:
            trace.path = "digitwise"
        work = _dense(x, n + 1)
        b = _dense(y, n + 1)
        if trace is not None:
            trace.states.append(_state(work))
        out = []
        for i in range(n + 1):
            if work[i] < b[i]:
                j = i + 1
                while j <= n and work[j] == 0:
                    j += 1
                if j > n:
                    raise Underflow(f"{base.name}: subtrahend exceeds minuend")
                if trace is not None:
                    trace.events.append(f"pos {i}: {work[i]} < {b[i]}, borrow reaches pos {j}")
                for k in range(j, i, -1):
                    work[k] -= 1
                    work[k - 1] += base.digit_bound(k - 1) + 1
                    if trace is not None:
                        trace.states.append(_state(work))
            out.append(work[i] - b[i])
        return Representation.from_digits(base, out)
    if trace is not None:
        trace.path = "decode"
    vx, vy = decode(x), decode(y)
    if vy > vx:
        raise Underflow(f"cannot subtract {vy} from {vx}")
    return encode_greedy(base, vx - vy)


def mul(x: Representation, y: Representation, trace: ArithTrace | None = None) -> Representation:
    """Canonical product, via value arithmetic (no digit-level rule exists here)."""
    base = _same_base(x, y)
    _require_canonical(x)
    _require_canonical(y)
    if trace is not None:
        trace.path = "decode"
    return encode_greedy(base, decode(x) * decode(y))


def divrem(
    x: Representation, y: Representation, trace: ArithTrace | None = None
) -> tuple[Representation, Representation]:
    """Canonical quotient and remainder, via value arithmetic."""
    base = _same_base(x, y)
    _require_canonical(x)
    _require_canonical(y)
    vy = decode(y)
    if vy == 0:
        raise DivisionByZero("division by zero")
    if trace is not None:
        trace.path = "decode"
    q, r = divmod(decode(x), vy)
    return encode_greedy(base, q), encode_greedy(base, r)
