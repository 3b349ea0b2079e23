"""Element-level classification: idempotency, the eleven ideal-element
predicates, generated left/right ideal elements, and principal-ideal
membership. All operations assume a structure with a greatest element."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .structure import INVOLUTION, OrderedAlgebra


@dataclass(frozen=True)
class ElementClassification:
    """Per-element predicate flags.

    ``quasi_ideal`` / ``star_quasi`` are tri-state: None means the required
    meet does not exist, which is distinct from the inequality failing.
    The ``star_*`` flags are None when the structure has no involution tier.
    """

    element: int
    idempotent: bool
    left_ideal: bool
    right_ideal: bool
    two_sided_ideal: bool
    quasi_ideal: Optional[bool]
    bi_ideal: bool
    star_left: Optional[bool]
    star_right: Optional[bool]
    star_quasi: Optional[bool]
    star_bi: Optional[bool]
    semiprime: bool
    star_semiprime: Optional[bool]

    FLAG_NAMES = (
        "idempotent", "left_ideal", "right_ideal", "two_sided_ideal",
        "quasi_ideal", "bi_ideal", "star_left", "star_right", "star_quasi",
        "star_bi", "semiprime", "star_semiprime",
    )


def _require_top(S: OrderedAlgebra) -> int:
    if S.e is None:
        raise ValueError("operation needs a structure with a greatest element")
    return S.e


def generated_left(S: OrderedAlgebra, a: int) -> Optional[int]:
    """Least left ideal element above a: the join of a and ea, or None if the
    join does not exist."""
    e = _require_top(S)
    return S.join(a, S.prod(e, a))


def generated_right(S: OrderedAlgebra, a: int) -> Optional[int]:
    """Least right ideal element above a: the join of a and ae."""
    e = _require_top(S)
    return S.join(a, S.prod(a, e))


def in_ideal_generated(S: OrderedAlgebra, x: int, a: int) -> bool:
    """Membership of x in the two-sided ideal generated by a, as the
    four-case bound: x <= a or x <= ea or x <= ae or x <= eae."""
    e = _require_top(S)
    le = S.le
    return (le(x, a) or le(x, S.prod(e, a)) or le(x, S.prod(a, e))
            or le(x, S.prod(e, a, e)))


def classify_element(S: OrderedAlgebra, a: int) -> ElementClassification:
    """Decide every element-level predicate for a by direct table checks."""
    e = _require_top(S)
    le = S.le
    ae = S.prod(a, e)
    ea = S.prod(e, a)
    left = le(ea, a)
    right = le(ae, a)
    m = S.meet(ae, ea)
    quasi = None if m is None else le(m, a)
    bi = le(S.prod(a, e, a), a)
    semiprime = all(le(t, a) for t in S.elements() if le(S.prod(t, t), a))

    star_left = star_right = star_quasi = star_bi = star_semiprime = None
    if S.has(INVOLUTION):
        c = S.conj(a)
        star_right = le(S.prod(c, e), a)
        star_left = le(S.prod(e, c), a)
        sm = S.meet(S.prod(c, e), S.prod(e, c))
        star_quasi = None if sm is None else le(sm, a)
        star_bi = le(S.prod(c, e, c), a)
        star_semiprime = all(
            le(t, a) for t in S.elements()
            if le(S.prod(S.conj(t), S.conj(t)), a))

    return ElementClassification(
        element=a,
        idempotent=S.prod(a, a) == a,
        left_ideal=left,
        right_ideal=right,
        two_sided_ideal=left and right,
        quasi_ideal=quasi,
        bi_ideal=bi,
        star_left=star_left,
        star_right=star_right,
        star_quasi=star_quasi,
        star_bi=star_bi,
        semiprime=semiprime,
        star_semiprime=star_semiprime,
    )


def classify_all(S: OrderedAlgebra) -> tuple[ElementClassification, ...]:
    return tuple(classify_element(S, a) for a in S.elements())
