"""Exhaustive model enumeration up to isomorphism, canonical forms,
compatible-order search and claim-counterexample sweeps.

Search order is cheapest-fail-first: associative multiplication tables are
generated by backtracking with incremental associativity pruning, then the
compatible order relations are grown pairwise with constraint propagation,
then the involutions are filtered. Isomorphism rejection is by explicit
canonical form; mirror images (anti-isomorphisms) are deliberately NOT
identified, since left and right notions differ everywhere in this theory.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, permutations, product
from typing import Iterable, Iterator, Optional

from .claims import (
    NOT_APPLICABLE, PASS, ClaimReport, StructureAnalysis, check_claim, expand_claim_ids,
)
from .fileformat import serialize_structure
from .structure import (
    INVOLUTION, OrderedAlgebra, PO_GROUPOID, PO_SEMIGROUP, POE, RawStructure, VEE, WEDGE,
    bounds_tables, greatest_element, tier_closure, validate_structure,
)

EXHAUSTIVE_MAX_ORDER = 6
CANONICAL_MAX_ORDER = 8


@dataclass(frozen=True)
class ModelSpec:
    """Enumeration request. ``required_tiers`` is closed under prerequisites
    and always includes the po-semigroup tier (the search space is associative
    tables). ``limit`` caps the emitted stream."""

    order: int
    required_tiers: frozenset[str] = frozenset()
    claim_filter: tuple[str, ...] = ()
    limit: Optional[int] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        tiers = tier_closure(self.required_tiers) | {PO_GROUPOID, PO_SEMIGROUP}
        object.__setattr__(self, "required_tiers", frozenset(tiers))
        object.__setattr__(self, "claim_filter", tuple(self.claim_filter))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte encoding of (mult, leq, star) minimized over all relabelings.
    Equal forms characterize isomorphic structures."""

    data: bytes

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.data).hexdigest()


def _perm_inverse(p):
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return q


def _apply_perm_mult(mult, p, pinv):
    n = len(p)
    return tuple(tuple(pinv[mult[p[x]][p[y]]] for y in range(n)) for x in range(n))


def _apply_perm_leq(leq, p):
    n = len(p)
    return tuple(tuple(leq[p[x]][p[y]] for y in range(n)) for x in range(n))


def _apply_perm_star(star, p, pinv):
    n = len(p)
    return tuple(pinv[star[p[x]]] for x in range(n))


def _encode(n, mult, leq, star) -> bytes:
    body = bytearray([n])
    for row in mult:
        body.extend(row)
    for row in leq:
        body.extend(1 if v else 0 for v in row)
    if star is None:
        body.append(0xFF)
    else:
        body.append(0xFE)
        body.extend(star)
    return bytes(body)


def canonical_form(S) -> CanonicalForm:
    """Minimal encoding over all n! relabelings (brute force, order <= 8)."""
    raw = S.raw if isinstance(S, OrderedAlgebra) else S
    n = raw.n
    if n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical_form is limited to order <= {CANONICAL_MAX_ORDER}")
    best = None
    for p in permutations(range(n)):
        pinv = _perm_inverse(p)
        enc = _encode(n, _apply_perm_mult(raw.mult, p, pinv),
                      _apply_perm_leq(raw.leq, p),
                      None if raw.star is None else _apply_perm_star(raw.star, p, pinv))
        if best is None or enc < best:
            best = enc
    return CanonicalForm(best)


# ---------------------------------------------------------------------------
# associative table generation

class _AssocSearch:
    """Backtracking fill of an n*n table with incremental associativity checks.

    Cells are filled block-wise (the full subtable on elements 0..t before
    touching element t+1) so constraints bind as early as possible; values are
    tried in order, so the emission order is deterministic and partitions by
    the first table row. ``occ[v]`` indexes the filled cells holding value v.
    """

    def __init__(self, n: int, fix_first_idempotent: bool = False):
        self.n = n
        self.fix_first_idempotent = fix_first_idempotent
        self.cells = []
        for t in range(n):
            self.cells.extend((t, j) for j in range(t + 1))
            self.cells.extend((i, t) for i in range(t))
        self.m = [[None] * n for _ in range(n)]
        self.occ = [[] for _ in range(n)]

    def _ok(self, i, j):
        # check every triple whose four table accesses just became defined
        m = self.m
        v = m[i][j]
        mi, mj, mv = m[i], m[j], m[v]
        for z in range(self.n):
            jz = mj[z]
            if jz is not None:
                r1, r2 = mv[z], mi[jz]           # (ij)z vs i(jz)
                if r1 is not None and r2 is not None and r1 != r2:
                    return False
        for x in range(self.n):
            mx = m[x]
            xi = mx[i]
            if xi is not None:
                r2 = mx[v]                        # x(ij)
                if r2 is not None:
                    r1 = m[xi][j]                 # (xi)j
                    if r1 is not None and r1 != r2:
                        return False
        for x, y in self.occ[i]:                  # (xy)j with xy == i
            yj = m[y][j]
            if yj is not None:
                r = m[x][yj]
                if r is not None and r != v:
                    return False
        for y, z in self.occ[j]:                  # i(yz) with yz == j
            iy = mi[y]
            if iy is not None:
                r = m[iy][z]
                if r is not None and r != v:
                    return False
        return True

    def run(self, visit):
        n, m, occ, cells = self.n, self.m, self.occ, self.cells
        last = len(cells) - 1

        def fill(k):
            i, j = cells[k]
            values = (0,) if k == 0 and self.fix_first_idempotent else range(n)
            for v in values:
                m[i][j] = v
                occ[v].append((i, j))
                if self._ok(i, j):
                    if k == last:
                        visit(tuple(map(tuple, m)))
                    else:
                        fill(k + 1)
                occ[v].pop()
            m[i][j] = None

        if n == 0:
            return
        fill(0)


def associative_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All labeled associative n*n tables, in deterministic search order."""
    out: list = []
    _AssocSearch(n).run(out.append)
    return iter(out)


# ---------------------------------------------------------------------------
# canonicalization helpers for the enumeration pipeline

def _element_colors(n, mult, leq=None, star=None, rounds=2):
    """Relabeling-invariant element colors, iteratively refined."""
    indeg = [0] * n
    for a in range(n):
        for b in range(n):
            indeg[mult[a][b]] += 1
    colors = []
    for x in range(n):
        col = [mult[x][x] == x, indeg[x], len(set(mult[x])),
               len({mult[a][x] for a in range(n)})]
        if leq is not None:
            col.append(sum(leq[x]))
            col.append(sum(leq[a][x] for a in range(n)))
        if star is not None:
            col.append(star[x] == x)
        colors.append(tuple(col))
    for _ in range(rounds):
        fresh = []
        for x in range(n):
            item = [colors[x],
                    tuple(sorted(colors[v] for v in mult[x])),
                    tuple(sorted(colors[mult[a][x]] for a in range(n)))]
            if leq is not None:
                item.append(tuple(sorted(colors[y] for y in range(n) if leq[x][y])))
            if star is not None:
                item.append(colors[star[x]])
            fresh.append(tuple(item))
        palette = sorted(set(fresh))
        colors = [palette.index(c) for c in fresh]
    return colors


def _color_respecting_perms(colors):
    """Permutations (new label -> old element) listing elements class-by-class
    in sorted color order; the product of within-class permutations."""
    groups: dict = {}
    for x, c in enumerate(colors):
        groups.setdefault(c, []).append(x)
    blocks = [groups[c] for c in sorted(groups)]
    for combo in product(*(permutations(b) for b in blocks)):
        yield tuple(x for blk in combo for x in blk)


def _canonical_mult(mult):
    """Canonical representative of a multiplication table up to relabeling
    (minimum over color-respecting perms; a consistent canonical choice)."""
    n = len(mult)
    colors = _element_colors(n, mult)
    best = None
    for p in _color_respecting_perms(colors):
        cand = _apply_perm_mult(mult, p, _perm_inverse(p))
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=32)
def _involutive_perms(n):
    return tuple(p for p in permutations(range(n)) if all(p[p[x]] == x for x in range(n)))


def _anti_automorphic(mult, p):
    n = len(mult)
    for a in range(n):
        row = mult[a]
        pa = p[a]
        for b in range(n):
            if p[row[b]] != mult[p[b]][pa]:
                return False
    return True


def _admits_involution(mult):
    return any(_anti_automorphic(mult, p) for p in _involutive_perms(len(mult)))


def _involutions(mult, leq):
    n = len(mult)
    out = []
    for p in _involutive_perms(n):
        if _anti_automorphic(mult, p) and all(
                not leq[a][b] or leq[p[a]][p[b]] for a in range(n) for b in range(n)):
            out.append(tuple(p))
    return out


def automorphisms(mult, leq=None, star=None):
    """All relabelings preserving the given tables (order <= 8)."""
    n = len(mult)
    if n > CANONICAL_MAX_ORDER:
        raise ValueError(f"automorphisms is limited to order <= {CANONICAL_MAX_ORDER}")
    mult = tuple(tuple(row) for row in mult)
    out = []
    for p in permutations(range(n)):
        pinv = _perm_inverse(p)
        if _apply_perm_mult(mult, p, pinv) != mult:
            continue
        if leq is not None and _apply_perm_leq(leq, p) != tuple(tuple(r) for r in leq):
            continue
        if star is not None and _apply_perm_star(star, p, pinv) != tuple(star):
            continue
        out.append(p)
    return out


@lru_cache(maxsize=16)
def semigroup_representatives(n: int, star_admitting: bool = False):
    """Canonical representatives of the associative tables up to isomorphism,
    optionally restricted to tables admitting an involutive anti-automorphism.

    The underlying search fixes an idempotent at element 0 (every finite
    semigroup has one, so every isomorphism class is still reached); the
    completeness of the result is what the naive-oracle tests verify.
    """
    reps = set()

    def visit(mult):
        if star_admitting and not _admits_involution(mult):
            return
        reps.add(_canonical_mult(mult))

    _AssocSearch(n, fix_first_idempotent=True).run(visit)
    return tuple(sorted(reps))


# ---------------------------------------------------------------------------
# compatible order search

def _propagate(rel, n, mult, star, a, b):
    """Force a <= b plus all consequences; False on conflict with decisions."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        cur = rel[x][y]
        if cur == 1:
            continue
        if cur == -1:
            return False
        if x != y and rel[y][x] == 1:
            return False  # antisymmetry
        rel[x][y] = 1
        if x != y and rel[y][x] == 0:
            rel[y][x] = -1
        for c in range(n):
            if rel[y][c] == 1 and rel[x][c] != 1:
                stack.append((x, c))
            if rel[c][x] == 1 and rel[c][y] != 1:
                stack.append((c, y))
        for c in range(n):
            pq = (mult[x][c], mult[y][c])
            if pq[0] != pq[1] and rel[pq[0]][pq[1]] != 1:
                stack.append(pq)
            pq = (mult[c][x], mult[c][y])
            if pq[0] != pq[1] and rel[pq[0]][pq[1]] != 1:
                stack.append(pq)
        if star is not None:
            pq = (star[x], star[y])
            if pq[0] != pq[1] and rel[pq[0]][pq[1]] != 1:
                stack.append(pq)
    return True


def _compatible_order_stream(mult, star=None):
    """All partial orders making (mult, leq[, star]) order-compatible (and
    star order-preserving), as boolean matrices, sparsest-first."""
    n = len(mult)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]

    def rec(rel, k):
        while k < len(pairs) and rel[pairs[k][0]][pairs[k][1]] != 0:
            k += 1
        if k == len(pairs):
            yield tuple(tuple(v == 1 for v in row) for row in rel)
            return
        i, j = pairs[k]
        rel[i][j] = -1
        yield from rec(rel, k + 1)
        rel[i][j] = 0
        trial = [row[:] for row in rel]
        if _propagate(trial, n, mult, star, i, j):
            yield from rec(trial, k + 1)

    yield from rec([[1 if i == j else 0 for j in range(n)] for i in range(n)], 0)


def _join_laws_hold(mult, leq, join_t):
    n = len(mult)
    for a in range(n):
        for b in range(n):
            ab = join_t[a][b]
            if ab is None:
                return False
            for c in range(n):
                if join_t[mult[a][c]][mult[b][c]] != mult[ab][c]:
                    return False
                if join_t[mult[c][a]][mult[c][b]] != mult[c][ab]:
                    return False
    return True


def compatible_orders(mult, star=None, *, require_greatest=False, require_joins=False,
                      require_meets=False, require_join_distributivity=False,
                      dedupe=True) -> Iterator[tuple[tuple[bool, ...], ...]]:
    """Stream the partial orders compatible with a fixed multiplication table
    (and involution), optionally constrained, deduplicated up to the
    automorphisms of (mult, star). The equality order is always compatible
    and comes first."""
    mult = tuple(tuple(row) for row in mult)
    star = tuple(star) if star is not None else None
    if star is not None:
        # the unary operation must be an involutive anti-automorphism before
        # any order can make the triple valid; otherwise the stream is empty
        if any(star[star[x]] != x for x in range(len(mult))) or not _anti_automorphic(mult, star):
            return
    auts = automorphisms(mult, star=star) if dedupe else []
    nontrivial_auts = [p for p in auts if any(p[i] != i for i in range(len(p)))]
    for leq in _compatible_order_stream(mult, star):
        if nontrivial_auts and any(_apply_perm_leq(leq, p) < leq for p in nontrivial_auts):
            continue
        if require_greatest and greatest_element(leq) is None:
            continue
        if require_joins or require_meets or require_join_distributivity:
            join_t, meet_t = bounds_tables(leq)
            if require_joins and any(v is None for row in join_t for v in row):
                continue
            if require_meets and any(v is None for row in meet_t for v in row):
                continue
            if require_join_distributivity and not _join_laws_hold(mult, leq, join_t):
                continue
        yield leq


# ---------------------------------------------------------------------------
# model enumeration

def enumerate_models(spec: ModelSpec) -> Iterator[OrderedAlgebra]:
    """Exactly one representative per isomorphism class of models with the
    requested tiers; deterministic order."""
    n = spec.order
    if n > EXHAUSTIVE_MAX_ORDER:
        raise ValueError(f"exhaustive enumeration is limited to order <= {EXHAUSTIVE_MAX_ORDER}")
    tiers = spec.required_tiers
    want_star = INVOLUTION in tiers
    emitted = 0
    for mult in semigroup_representatives(n, star_admitting=want_star):
        mult_auts = automorphisms(mult)
        nontrivial = [p for p in mult_auts if any(p[i] != i for i in range(n))]
        for leq in _compatible_order_stream(mult, None):
            if nontrivial and any(_apply_perm_leq(leq, p) < leq for p in nontrivial):
                continue
            if POE in tiers and greatest_element(leq) is None:
                continue
            join_t, meet_t = bounds_tables(leq)
            if (VEE in tiers) and (any(v is None for row in join_t for v in row)
                                   or not _join_laws_hold(mult, leq, join_t)):
                continue
            if WEDGE in tiers and any(v is None for row in meet_t for v in row):
                continue
            if want_star:
                stab = [p for p in mult_auts if _apply_perm_leq(leq, p) == leq]
                stab_nontrivial = [p for p in stab if any(p[i] != i for i in range(n))]
                for star in _involutions(mult, leq):
                    if stab_nontrivial and any(
                            _apply_perm_star(star, p, _perm_inverse(p)) < star
                            for p in stab_nontrivial):
                        continue
                    yield _finish_model(mult, leq, star, tiers)
                    emitted += 1
                    if spec.limit is not None and emitted >= spec.limit:
                        return
            else:
                yield _finish_model(mult, leq, None, tiers)
                emitted += 1
                if spec.limit is not None and emitted >= spec.limit:
                    return


def _finish_model(mult, leq, star, tiers):
    model, report = validate_structure(RawStructure(n=len(mult), mult=mult, leq=leq, star=star))
    missing = tiers - report.accepted
    assert not missing, f"enumerated model misses tiers {missing}"  # search bug if hit
    return model


def collect_models(spec: ModelSpec) -> tuple[list[OrderedAlgebra], bool]:
    """Materialize the stream; the second component is False when the limit
    truncated it (the partial-stream marker)."""
    if spec.limit is None:
        return list(enumerate_models(spec)), True
    inner = ModelSpec(order=spec.order, required_tiers=spec.required_tiers,
                      claim_filter=spec.claim_filter, limit=None)
    models = list(islice(enumerate_models(inner), spec.limit + 1))
    if len(models) > spec.limit:
        return models[:spec.limit], False
    return models, True


# ---------------------------------------------------------------------------
# counterexample sweep

@dataclass
class ClaimSweepStats:
    claim_id: str
    applicable: int = 0
    passes: int = 0
    vacuous_passes: int = 0
    failures: int = 0
    not_applicable: int = 0
    nonvacuous_instances: int = 0


@dataclass
class SweepReport:
    spec: ModelSpec
    claim_ids: tuple[str, ...]
    models_checked: int
    complete: bool
    stats: dict[str, ClaimSweepStats] = field(default_factory=dict)
    counterexample: Optional[tuple[OrderedAlgebra, ClaimReport]] = None

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def never_nonvacuous(self) -> tuple[str, ...]:
        """Claims with zero non-vacuous instances over the whole sweep; their
        per-claim stats show whether the hypothesis was ever met."""
        return tuple(cid for cid in self.claim_ids
                     if self.stats[cid].nonvacuous_instances == 0)


def search_counterexample(spec: ModelSpec,
                          claim_ids: Optional[Iterable[str]] = None) -> SweepReport:
    """Sweep the model stream, stopping at the first model where any listed
    claim fails; otherwise summarize per-claim totals. When ``claim_ids`` is
    None, the spec's claim_filter is used (empty filter = empty report)."""
    ids = expand_claim_ids(spec.claim_filter if claim_ids is None else claim_ids)
    report = SweepReport(spec=spec, claim_ids=ids, models_checked=0, complete=True,
                         stats={cid: ClaimSweepStats(cid) for cid in ids})
    if not ids:
        return report
    inner = ModelSpec(order=spec.order, required_tiers=spec.required_tiers,
                      claim_filter=spec.claim_filter, limit=None)
    for model in enumerate_models(inner):
        if spec.limit is not None and report.models_checked == spec.limit:
            report.complete = False  # partial-stream marker: the cap truncated
            return report
        report.models_checked += 1
        ctx = StructureAnalysis(model)
        for cid in ids:
            rep = check_claim(model, cid, ctx)
            st = report.stats[cid]
            if rep.status == NOT_APPLICABLE:
                st.not_applicable += 1
                continue
            st.applicable += 1
            st.nonvacuous_instances += rep.instances_checked
            if rep.status == PASS:
                st.passes += 1
                if rep.vacuous:
                    st.vacuous_passes += 1
            else:
                st.failures += 1
                if report.counterexample is None:
                    report.counterexample = (model, rep)
        if report.counterexample is not None:
            report.complete = False
            return report
    return report


# ---------------------------------------------------------------------------
# catalog persistence

def write_catalog(models: Iterable[OrderedAlgebra], outdir) -> list[str]:
    """One structure file per model plus index.txt with canonical digests."""
    os.makedirs(outdir, exist_ok=True)
    names = []
    index = []
    for k, model in enumerate(models, start=1):
        name = f"model_{k:04d}.txt"
        with open(os.path.join(outdir, name), "w", encoding="utf-8") as fh:
            fh.write(serialize_structure(model))
        index.append(f"{name} {canonical_form(model).digest}")
        names.append(name)
    with open(os.path.join(outdir, "index.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(index) + "\n")
    return names
