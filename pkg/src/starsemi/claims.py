"""Registry of executable algebraic claims over a single structure.

Every claim has a hypothesis gate (required axiom tiers plus an optional
structure-level condition) and a body whose quantifiers run exhaustively over
the elements. Guarded instantiations (an element failing an antecedent, a
meet that does not exist) are skipped as vacuous and not counted. A claim
never re-uses the characterization it asserts: bodies go through the
definitional operations of the ideals/regularity/filters modules.

Claim ids are stable. Theorems stated as equivalences are split into -fwd
and -conv entries because the two directions carry different hypotheses;
multi-part propositions whose halves carry different hypotheses are split
the same way (e.g. prop07 / prop07-bi).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Optional

from .filters import filter_generated, n_class_partition, thm26_set
from .ideals import classify_all, generated_left, generated_right, in_ideal_generated
from .regularity import regularity_profile
from .structure import (
    ALL_TIERS, INVOLUTION, LE, OrderedAlgebra, PO_GROUPOID, PO_SEMIGROUP, POE, VEE, WEDGE,
)

STATEMENT = "statement"
PROOF_STEP = "proof-step"
MUTANT = "mutant"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    requires_tiers: frozenset[str]
    condition: Optional[str] = None
    variables: tuple[str, ...] = ()
    kind: str = STATEMENT


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    status: str
    reason: str = ""
    counterexample: Optional[tuple[int, ...]] = None
    variables: tuple[str, ...] = ()
    instances_checked: int = 0
    vacuous: bool = False


class StructureAnalysis:
    """Lazy caches shared by the claim checks on one structure."""

    def __init__(self, S: OrderedAlgebra):
        self.S = S

    @cached_property
    def classes(self):
        return classify_all(self.S)

    @cached_property
    def profile(self):
        return regularity_profile(self.S)

    @cached_property
    def filter_members(self):
        return tuple(filter_generated(self.S, x).members for x in self.S.elements())

    @cached_property
    def partition(self):
        return n_class_partition(self.S)


# ---------------------------------------------------------------------------
# structure-level hypothesis conditions

def _cond_star_regular(ctx):
    return ctx.profile.star_regular is True


def _cond_regular(ctx):
    return ctx.profile.regular


def _cond_star_intra_regular(ctx):
    return ctx.profile.star_intra_regular is True


def _cond_star_square_membership(ctx):
    S = ctx.S
    return all(
        in_ideal_generated(S, x, S.prod(S.conj(x), S.conj(x)))
        for x in S.elements())


def _cond_square_membership(ctx):
    S = ctx.S
    return all(in_ideal_generated(S, x, S.prod(x, x)) for x in S.elements())


def _cond_ideals_star_semiprime(ctx):
    return all(c.star_semiprime is True for c in ctx.classes if c.two_sided_ideal)


def _meets_below(ctx, product_of):
    # for every left ideal element a and right ideal element b with a ^ b
    # defined: a ^ b <= product_of(a, b)
    S = ctx.S
    for ca in ctx.classes:
        if not ca.left_ideal:
            continue
        for cb in ctx.classes:
            if not cb.right_ideal:
                continue
            m = S.meet(ca.element, cb.element)
            if m is not None and not S.le(m, product_of(ca.element, cb.element)):
                return False
    return True


def _cond_meets_below_reversed_star_products(ctx):
    S = ctx.S
    return _meets_below(ctx, lambda a, b: S.prod(S.conj(b), S.conj(a)))


def _cond_meets_below_star_products(ctx):
    S = ctx.S
    return _meets_below(ctx, lambda a, b: S.prod(S.conj(a), S.conj(b)))


def _cond_generated_ideals_dominate_star(ctx):
    S = ctx.S
    for a in S.elements():
        sa = S.conj(a)
        if not (S.le(a, generated_right(S, sa)) and S.le(a, generated_left(S, sa))):
            return False
    return True


def _cond_sided_ideals_idempotent_products_quasi(ctx):
    S = ctx.S
    for c in ctx.classes:
        if (c.right_ideal or c.left_ideal) and not c.idempotent:
            return False
    for ca in ctx.classes:
        if not ca.right_ideal:
            continue
        for cb in ctx.classes:
            if not cb.left_ideal:
                continue
            if ctx.classes[S.prod(ca.element, cb.element)].quasi_ideal is not True:
                return False
    return True


def _cond_prop18_conjunction(ctx):
    return (_cond_generated_ideals_dominate_star(ctx)
            and _cond_sided_ideals_idempotent_products_quasi(ctx))


def _cond_filters_equal_star_window(ctx):
    S = ctx.S
    return all(ctx.filter_members[x] == thm26_set(S, x) for x in S.elements())


CONDITIONS: dict[str, Callable[[StructureAnalysis], bool]] = {
    "star-regular": _cond_star_regular,
    "regular": _cond_regular,
    "star-intra-regular": _cond_star_intra_regular,
    "star-squares-generate": _cond_star_square_membership,
    "squares-generate": _cond_square_membership,
    "ideal-elements-star-semiprime": _cond_ideals_star_semiprime,
    "sided-meets-below-reversed-star-products": _cond_meets_below_reversed_star_products,
    "sided-meets-below-star-products": _cond_meets_below_star_products,
    "generated-ideals-dominate-star": _cond_generated_ideals_dominate_star,
    "sided-ideals-idempotent-and-products-quasi": _cond_sided_ideals_idempotent_products_quasi,
    "prop18-conditions": _cond_prop18_conjunction,
    "filters-equal-star-window": _cond_filters_equal_star_window,
}


# ---------------------------------------------------------------------------
# claim bodies: generators of (binding, ok)

Body = Callable[[StructureAnalysis], Iterator[tuple[tuple[int, ...], bool]]]


def _body_prop04(ctx):
    for c in ctx.classes:
        if c.star_right or c.star_left:
            yield (c.element,), c.star_quasi is True


def _body_prop04_bi(ctx):
    for c in ctx.classes:
        if c.star_quasi is True:
            yield (c.element,), c.star_bi is True


def _body_prop05(ctx):
    S = ctx.S
    for a in S.elements():
        for b in S.elements():
            j, m = S.join(a, b), S.meet(a, b)
            if j is None and m is None:
                continue
            ok = True
            if j is not None:
                sj = S.join(S.conj(a), S.conj(b))
                ok = sj is not None and S.conj(j) == sj
            if ok and m is not None:
                sm = S.meet(S.conj(a), S.conj(b))
                ok = sm is not None and S.conj(m) == sm
            yield (a, b), ok


def _body_prop06(ctx):
    S = ctx.S
    for a in S.elements():
        sa = S.conj(a)
        ok = (S.prod(a, generated_left(S, sa)) == S.prod(generated_right(S, a), sa)
              and S.prod(generated_right(S, sa), a) == S.prod(sa, generated_left(S, a)))
        yield (a,), ok


def _body_prop07(ctx):
    S = ctx.S
    for c in ctx.classes:
        cs = ctx.classes[S.conj(c.element)]
        ok = (c.left_ideal == cs.right_ideal
              and c.right_ideal == cs.left_ideal
              and c.quasi_ideal == cs.quasi_ideal)
        yield (c.element,), ok


def _body_prop07_bi(ctx):
    S = ctx.S
    for c in ctx.classes:
        yield (c.element,), c.bi_ideal == ctx.classes[S.conj(c.element)].bi_ideal


def _body_prop08(ctx):
    S = ctx.S
    e = S.e
    for ca in ctx.classes:
        if not ca.left_ideal:
            continue
        for cb in ctx.classes:
            if not cb.right_ideal:
                continue
            m = S.meet(S.conj(ca.element), S.conj(cb.element))
            if m is None:
                continue
            if S.meet(S.prod(m, e), S.prod(e, m)) is None:
                continue
            yield (ca.element, cb.element), ctx.classes[m].quasi_ideal is True


def _body_prop08_idem(ctx):
    S = ctx.S
    for c in ctx.classes:
        if c.left_ideal or c.right_ideal:
            yield (c.element,), ctx.classes[S.conj(c.element)].idempotent


def _body_prop09(ctx):
    S = ctx.S
    for ca in ctx.classes:
        for cb in ctx.classes:
            if not (ca.right_ideal or cb.right_ideal):
                continue
            p = S.conj(S.prod(ca.element, cb.element))
            yield (ca.element, cb.element), ctx.classes[p].bi_ideal


def _body_ideals_star_semiprime(ctx):
    for c in ctx.classes:
        if c.two_sided_ideal:
            yield (c.element,), c.star_semiprime is True


def _body_ideals_semiprime(ctx):
    for c in ctx.classes:
        if c.two_sided_ideal:
            yield (c.element,), c.semiprime


def _body_thm13_fwd(ctx):
    S = ctx.S
    for ca in ctx.classes:
        for cb in ctx.classes:
            if not (ca.left_ideal or cb.right_ideal):
                continue
            m = S.meet(ca.element, cb.element)
            if m is None:
                continue
            target = S.prod(S.conj(ca.element), S.conj(cb.element))
            yield (ca.element, cb.element), S.le(m, target)


def _body_regular(ctx):
    S = ctx.S
    for a in S.elements():
        yield (a,), S.le(a, S.prod(a, S.e, a))


def _body_intra_regular(ctx):
    S = ctx.S
    for a in S.elements():
        yield (a,), S.le(a, S.prod(S.e, a, a, S.e))


def _body_star_regular(ctx):
    S = ctx.S
    for a in S.elements():
        sa = S.conj(a)
        yield (a,), S.le(a, S.prod(sa, S.e, sa))


def _body_star_intra_regular(ctx):
    S = ctx.S
    for a in S.elements():
        sa = S.conj(a)
        yield (a,), S.le(a, S.prod(S.e, sa, sa, S.e))


def _body_prop14(ctx):
    S = ctx.S
    for a in S.elements():
        sa = S.conj(a)
        ok = S.le(a, generated_right(S, sa)) and S.le(a, generated_left(S, sa))
        yield (a,), ok


def _body_prop15(ctx):
    S = ctx.S
    for c in ctx.classes:
        if c.left_ideal or c.right_ideal or c.bi_ideal:
            yield (c.element,), S.conj(c.element) == c.element


def _body_prop16(ctx):
    S = ctx.S
    for ca in ctx.classes:
        if not ca.right_ideal:
            continue
        for cb in ctx.classes:
            if cb.left_ideal:
                p = S.prod(ca.element, cb.element)
                yield (ca.element, cb.element), ctx.classes[p].quasi_ideal is True


def _body_prop16_eq(ctx):
    S = ctx.S
    for ca in ctx.classes:
        if not ca.right_ideal:
            continue
        for cb in ctx.classes:
            if cb.left_ideal:
                a, b = ca.element, cb.element
                yield (a, b), S.meet(a, b) == S.prod(a, b)


def _body_prop17_idem(ctx):
    for c in ctx.classes:
        if c.right_ideal or c.left_ideal:
            yield (c.element,), c.idempotent


def _body_thm19(ctx):
    lhs = ctx.profile.star_regular is True
    yield (), lhs == _cond_prop18_conjunction(ctx)


def _body_thm20(ctx):
    S = ctx.S
    for c in ctx.classes:
        if c.star_bi is True:
            b = c.element
            sb = S.conj(b)
            x = generated_right(S, sb)
            y = generated_left(S, sb)
            yield (b,), S.prod(x, y) == b


def _body_thm20_eq(ctx):
    S = ctx.S
    for c in ctx.classes:
        if c.star_bi is True:
            b = c.element
            sb = S.conj(b)
            yield (b,), S.prod(sb, S.e, sb) == b


def _body_thm22_fwd(ctx):
    S = ctx.S
    for ca in ctx.classes:
        if not ca.left_ideal:
            continue
        for cb in ctx.classes:
            if not cb.right_ideal:
                continue
            m = S.meet(ca.element, cb.element)
            if m is None:
                continue
            target = S.prod(S.conj(cb.element), S.conj(ca.element))
            yield (ca.element, cb.element), S.le(m, target)


def _body_prop23(ctx):
    S = ctx.S
    e = S.e
    for a in S.elements():
        for b in S.elements():
            ok = S.prod(e, a, b, e) == S.prod(e, S.conj(b), S.conj(a), e)
            yield (a, b), ok


def _body_thm26_fwd(ctx):
    S = ctx.S
    for x in S.elements():
        yield (x,), ctx.filter_members[x] == thm26_set(S, x)


def _body_prop27(ctx):
    S = ctx.S
    part = ctx.partition
    for x in S.elements():
        t = S.prod(S.e, S.conj(x), S.e)
        own_block = part.blocks[part.block_of(x)]
        star_block = part.blocks[part.block_of(S.conj(x))]
        ok = t in star_block and all(S.le(y, t) for y in own_block)
        yield (x,), ok


# mutants: deliberately corrupted variants used to prove the harness can fail

def _body_mut_prop23_nostar(ctx):
    S = ctx.S
    e = S.e
    for a in S.elements():
        for b in S.elements():
            yield (a, b), S.prod(e, a, b, e) == S.prod(e, b, a, e)


def _body_mut_thm13_swapped(ctx):
    S = ctx.S
    for ca in ctx.classes:
        for cb in ctx.classes:
            if not (ca.left_ideal or cb.right_ideal):
                continue
            m = S.meet(ca.element, cb.element)
            if m is None:
                continue
            target = S.prod(S.conj(cb.element), S.conj(ca.element))
            yield (ca.element, cb.element), S.le(m, target)


def _body_mut_prop15_all(ctx):
    S = ctx.S
    for a in S.elements():
        yield (a,), S.conj(a) == a


def _body_mut_prop07_noswap(ctx):
    S = ctx.S
    for c in ctx.classes:
        yield (c.element,), c.left_ideal == ctx.classes[S.conj(c.element)].left_ideal


def _body_mut_prop17_all_idem(ctx):
    for c in ctx.classes:
        yield (c.element,), c.idempotent


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class _ClaimDef:
    claim: Claim
    body: Body


def _mk(id, statement, tiers, body, *, condition=None, variables=(), kind=STATEMENT):
    return _ClaimDef(
        Claim(id=id, statement=statement, requires_tiers=frozenset(tiers),
              condition=condition, variables=tuple(variables), kind=kind),
        body)


_INV_POE = (INVOLUTION, POE)
_INV_POE_SG = (INVOLUTION, POE, PO_SEMIGROUP)
_INV_LE_SG = (INVOLUTION, LE, PO_SEMIGROUP)
_INV_VEE_SG = (INVOLUTION, VEE, PO_SEMIGROUP)

_DEFS: tuple[_ClaimDef, ...] = (
    _mk("prop04",
        "every *-right or *-left ideal element is a *-quasi-ideal element",
        (INVOLUTION, POE, WEDGE), _body_prop04, variables=("a",)),
    _mk("prop04-bi",
        "every *-quasi-ideal element is a *-bi-ideal element",
        (INVOLUTION, POE, WEDGE, PO_SEMIGROUP), _body_prop04_bi, variables=("a",)),
    _mk("prop05",
        "the involution distributes over existing joins and meets: "
        "(a v b)* = a* v b* and (a ^ b)* = a* ^ b*",
        (INVOLUTION, PO_GROUPOID), _body_prop05, variables=("a", "b")),
    _mk("prop06",
        "a l(a*) = r(a) a* and r(a*) a = a* l(a)",
        _INV_VEE_SG, _body_prop06, variables=("a",)),
    _mk("prop07",
        "a is a left (right) ideal element iff a* is a right (left) one; "
        "quasi-ideal status (including meet existence) transfers to a*",
        _INV_POE, _body_prop07, variables=("a",)),
    _mk("prop07-bi",
        "a is a bi-ideal element iff a* is",
        _INV_POE_SG, _body_prop07_bi, variables=("a",)),
    _mk("prop08",
        "for a left ideal element a and a right ideal element b, "
        "a* ^ b* is a quasi-ideal element whenever the needed meets exist",
        _INV_POE, _body_prop08, variables=("a", "b")),
    _mk("prop08-idem",
        "on regular structures, a* is idempotent for every left or right ideal element a",
        _INV_POE_SG, _body_prop08_idem, condition="regular", variables=("a",)),
    _mk("prop09",
        "(ab)* is a bi-ideal element when a or b is a right ideal element",
        _INV_POE_SG, _body_prop09, variables=("a", "b")),
    _mk("prop11",
        "if every x lies in the ideal generated by x*x*, "
        "the ideal elements are *-semiprime",
        _INV_POE_SG, _body_ideals_star_semiprime,
        condition="star-squares-generate", variables=("a",)),
    _mk("prop11-plain",
        "if every x lies in the ideal generated by x^2, the ideal elements are semiprime",
        (POE, PO_SEMIGROUP), _body_ideals_semiprime,
        condition="squares-generate", variables=("a",)),
    _mk("thm13-fwd",
        "on *-regular structures: a ^ b <= a*b* for a left ideal element a and any b, "
        "or any a and a right ideal element b, whenever a ^ b exists",
        _INV_POE_SG, _body_thm13_fwd, condition="star-regular", variables=("a", "b")),
    _mk("thm13-conv",
        "if a ^ b <= b*a* for every left ideal element a and right ideal element b, "
        "the structure is regular",
        _INV_LE_SG, _body_regular,
        condition="sided-meets-below-reversed-star-products", variables=("a",)),
    _mk("prop14",
        "on *-regular structures: a <= r(a*) and a <= l(a*)",
        _INV_VEE_SG, _body_prop14, condition="star-regular", variables=("a",)),
    _mk("prop15",
        "on *-regular structures, every left, right or bi-ideal element is star-fixed",
        _INV_POE_SG, _body_prop15, condition="star-regular", variables=("a",)),
    _mk("prop16",
        "on *-regular meet-structures, ab is a quasi-ideal element "
        "for a right ideal element a and a left ideal element b",
        (INVOLUTION, POE, PO_SEMIGROUP, WEDGE), _body_prop16,
        condition="star-regular", variables=("a", "b")),
    _mk("prop16-eq",
        "on *-regular meet-structures, a ^ b = ab "
        "for a right ideal element a and a left ideal element b",
        (INVOLUTION, POE, PO_SEMIGROUP, WEDGE), _body_prop16_eq,
        condition="star-regular", variables=("a", "b"), kind=PROOF_STEP),
    _mk("prop17",
        "*-regular structures are regular",
        _INV_POE_SG, _body_regular, condition="star-regular", variables=("a",)),
    _mk("prop17-idem",
        "on regular structures, right and left ideal elements are idempotent",
        (POE, PO_SEMIGROUP), _body_prop17_idem, condition="regular", variables=("a",)),
    _mk("prop18",
        "a lattice structure satisfying the domination and idempotency/quasi "
        "conditions is *-regular",
        _INV_LE_SG, _body_star_regular, condition="prop18-conditions", variables=("a",)),
    _mk("thm19",
        "a lattice structure is *-regular iff the domination and "
        "idempotency/quasi conditions both hold",
        _INV_LE_SG, _body_thm19),
    _mk("thm20",
        "on *-regular join-structures, every *-bi-ideal element b equals "
        "r(b*) l(b*), a product of a right and a left ideal element",
        _INV_VEE_SG, _body_thm20, condition="star-regular", variables=("b",)),
    _mk("thm20-eq",
        "on *-regular structures, b = b* e b* for every *-bi-ideal element b",
        _INV_POE_SG, _body_thm20_eq, condition="star-regular", variables=("b",),
        kind=PROOF_STEP),
    _mk("thm22-fwd",
        "on *-intra-regular structures: a ^ b <= b*a* for a left ideal element a "
        "and a right ideal element b, whenever a ^ b exists",
        _INV_POE_SG, _body_thm22_fwd, condition="star-intra-regular", variables=("a", "b")),
    _mk("thm22-conv",
        "if a ^ b <= a*b* for every left ideal element a and right ideal element b "
        "of a lattice structure, the structure is intra-regular",
        _INV_LE_SG, _body_intra_regular,
        condition="sided-meets-below-star-products", variables=("a",)),
    _mk("prop23",
        "on *-intra-regular structures: e a b e = e b* a* e",
        _INV_POE_SG, _body_prop23, condition="star-intra-regular", variables=("a", "b")),
    _mk("prop24-fwd",
        "on *-intra-regular structures, the ideal elements are *-semiprime",
        _INV_POE_SG, _body_ideals_star_semiprime,
        condition="star-intra-regular", variables=("a",)),
    _mk("prop24-conv",
        "if the ideal elements are *-semiprime, the structure is intra-regular",
        _INV_POE_SG, _body_intra_regular,
        condition="ideal-elements-star-semiprime", variables=("a",)),
    _mk("prop25-reg",
        "*-regular structures are regular",
        _INV_POE_SG, _body_regular, condition="star-regular", variables=("a",)),
    _mk("prop25-intra",
        "*-intra-regular structures are intra-regular",
        _INV_POE_SG, _body_intra_regular, condition="star-intra-regular", variables=("a",)),
    _mk("thm26-fwd",
        "on *-intra-regular structures, the filter of x is {y | x <= e y* e}",
        _INV_POE_SG, _body_thm26_fwd, condition="star-intra-regular", variables=("x",)),
    _mk("thm26-conv",
        "if the filter of every x equals {y | x <= e y* e}, "
        "the structure is *-intra-regular",
        _INV_POE_SG, _body_star_intra_regular,
        condition="filters-equal-star-window", variables=("a",)),
    _mk("prop27",
        "on *-intra-regular structures, e x* e lies in the filter class of x* "
        "and bounds the filter class of x from above",
        _INV_POE_SG, _body_prop27, condition="star-intra-regular", variables=("x",)),
)

_MUTANT_DEFS: tuple[_ClaimDef, ...] = (
    _mk("mut-prop23-nostar",
        "corrupted prop23 with the stars dropped: e a b e = e b a e",
        _INV_POE_SG, _body_mut_prop23_nostar,
        condition="star-intra-regular", variables=("a", "b"), kind=MUTANT),
    _mk("mut-thm13-swapped",
        "corrupted thm13-fwd with the product reversed: a ^ b <= b*a*",
        _INV_POE_SG, _body_mut_thm13_swapped,
        condition="star-regular", variables=("a", "b"), kind=MUTANT),
    _mk("mut-prop15-all",
        "corrupted prop15 asserted for arbitrary elements: a = a* for every a",
        _INV_POE_SG, _body_mut_prop15_all,
        condition="star-regular", variables=("a",), kind=MUTANT),
    _mk("mut-prop07-noswap",
        "corrupted prop07 without the side swap: a is a left ideal element iff a* is",
        _INV_POE, _body_mut_prop07_noswap, variables=("a",), kind=MUTANT),
    _mk("mut-prop17-all-idem",
        "corrupted prop17 idempotency asserted for arbitrary elements of regular structures",
        (POE, PO_SEMIGROUP), _body_mut_prop17_all_idem,
        condition="regular", variables=("a",), kind=MUTANT),
)

_REGISTRY = {d.claim.id: d for d in _DEFS}
_MUTANTS = {d.claim.id: d for d in _MUTANT_DEFS}
assert len(_REGISTRY) == len(_DEFS) and len(_MUTANTS) == len(_MUTANT_DEFS)


def list_claims() -> tuple[Claim, ...]:
    """The complete registry in stable order."""
    return tuple(d.claim for d in _DEFS)


def list_mutants() -> tuple[Claim, ...]:
    return tuple(d.claim for d in _MUTANT_DEFS)


def get_claim(claim_id: str) -> Claim:
    return _lookup(claim_id).claim


def _lookup(claim_id: str) -> _ClaimDef:
    d = _REGISTRY.get(claim_id) or _MUTANTS.get(claim_id)
    if d is None:
        raise ValueError(f"unknown claim id: {claim_id!r}")
    return d


def expand_claim_ids(tokens) -> tuple[str, ...]:
    """Resolve user-supplied claim selectors: 'all', exact ids, or a bare
    family prefix such as 'prop25' (expands to prop25-reg, prop25-intra)."""
    out: list[str] = []
    unknown: list[str] = []
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        if tok == "all":
            out.extend(d.claim.id for d in _DEFS)
            continue
        if tok in _REGISTRY or tok in _MUTANTS:
            out.append(tok)
            continue
        family = [d.claim.id for d in _DEFS if d.claim.id.startswith(tok + "-")]
        if family:
            out.extend(family)
        else:
            unknown.append(tok)
    if unknown:
        raise ValueError("unknown claim ids: " + ", ".join(sorted(unknown)))
    seen: set[str] = set()
    return tuple(x for x in out if not (x in seen or seen.add(x)))


def check_claim(S: OrderedAlgebra, claim_id: str,
                analysis: Optional[StructureAnalysis] = None) -> ClaimReport:
    """Evaluate one claim: hypothesis first (tiers, then the structure-level
    condition), then the body quantifiers, exhaustively."""
    d = _lookup(claim_id)
    claim = d.claim
    missing = [t for t in ALL_TIERS
               if t in claim.requires_tiers and t not in S.tiers]
    if missing:
        return ClaimReport(claim_id=claim.id, status=NOT_APPLICABLE,
                           reason="missing tier(s): " + ", ".join(missing),
                           variables=claim.variables)
    ctx = analysis if analysis is not None else StructureAnalysis(S)
    if claim.condition is not None and not CONDITIONS[claim.condition](ctx):
        return ClaimReport(claim_id=claim.id, status=NOT_APPLICABLE,
                           reason=f"hypothesis not met: {claim.condition}",
                           variables=claim.variables)
    instances = 0
    first_fail: Optional[tuple[int, ...]] = None
    for binding, ok in d.body(ctx):
        instances += 1
        if not ok and first_fail is None:
            first_fail = tuple(binding)
    if first_fail is not None:
        return ClaimReport(claim_id=claim.id, status=FAIL,
                           counterexample=first_fail, variables=claim.variables,
                           instances_checked=instances)
    return ClaimReport(claim_id=claim.id, status=PASS, variables=claim.variables,
                       instances_checked=instances, vacuous=instances == 0)


def check_all(S: OrderedAlgebra,
              analysis: Optional[StructureAnalysis] = None) -> tuple[ClaimReport, ...]:
    ctx = analysis if analysis is not None else StructureAnalysis(S)
    return tuple(check_claim(S, d.claim.id, ctx) for d in _DEFS)


def replay_counterexample(S: OrderedAlgebra, report: ClaimReport) -> bool:
    """Re-evaluate a failed claim body at the reported witness; True when the
    witness still violates the claim."""
    if report.status != FAIL or report.counterexample is None:
        raise ValueError("report carries no counterexample")
    d = _lookup(report.claim_id)
    ctx = StructureAnalysis(S)
    for binding, ok in d.body(ctx):
        if tuple(binding) == report.counterexample:
            return not ok
    return False


def report_record(report: ClaimReport, S: Optional[OrderedAlgebra] = None) -> dict:
    """Serialize one report; field names are the module's wire contract."""
    witness = None
    if report.counterexample is not None:
        witness = {var: (S.label(el) if S is not None else str(el))
                   for var, el in zip(report.variables, report.counterexample)}
    return {
        "id": report.claim_id,
        "status": report.status,
        "witness": witness,
        "instances_checked": report.instances_checked,
        "vacuous": report.vacuous,
        "reason": report.reason,
    }
