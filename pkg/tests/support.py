"""Shared builders and independent oracles for the test suite.

The oracles here deliberately re-derive results from definitions (upper-bound
scans, full generate-filter-dedupe enumeration) so the library's faster paths
are checked against something they do not share code with.
"""

from itertools import permutations, product

from starsemi import RawStructure, validate_structure
from starsemi.enumeration import canonical_form
from starsemi.structure import greatest_element, reflexive_transitive_closure

EXAMPLE2_MULT = (
    (0, 0, 0, 0, 0),
    (0, 1, 0, 3, 0),
    (0, 4, 2, 2, 4),
    (0, 1, 3, 3, 1),
    (0, 4, 0, 2, 0),
)
EXAMPLE2_STAR = (0, 2, 1, 3, 4)
EXAMPLE2_LABELS = ("a", "b", "c", "d", "f")


def mk(mult, pairs=None, star=None, labels=None):
    """Build and validate a structure from a table and order generating pairs."""
    n = len(mult)
    leq = reflexive_transitive_closure(n, pairs or ())
    return validate_structure(RawStructure(
        n=n, mult=tuple(map(tuple, mult)), leq=leq,
        star=tuple(star) if star is not None else None,
        labels=labels))


def example2(star=EXAMPLE2_STAR, pairs=None):
    return mk(EXAMPLE2_MULT, pairs=pairs, star=star, labels=EXAMPLE2_LABELS)


def chain2():
    """Two-chain 0 <= e with xy = 0 except ee = e, identity star."""
    return mk(((0, 0), (0, 1)), pairs=((0, 1),), star=(0, 1))


def one_point():
    return mk(((0,),), star=(0,))


def diamond_constant():
    """Diamond order (0 < 1, 2 < 3, 1 and 2 incomparable) with constant
    multiplication, which is compatible with any order."""
    return mk(((0,) * 4,) * 4, pairs=((0, 1), (0, 2), (1, 3), (2, 3)))


def scan_join(S, a, b):
    """Definition-level LUB scan, independent of the cached tables."""
    ubs = [u for u in S.elements() if S.le(a, u) and S.le(b, u)]
    least = [u for u in ubs if all(S.le(u, v) for v in ubs)]
    return least[0] if len(least) == 1 else None


def scan_meet(S, a, b):
    lbs = [u for u in S.elements() if S.le(u, a) and S.le(u, b)]
    greatest = [u for u in lbs if all(S.le(v, u) for v in lbs)]
    return greatest[0] if len(greatest) == 1 else None


def all_posets(n):
    """Every reflexive-antisymmetric-transitive boolean matrix on n elements,
    by brute force over the off-diagonal cells."""
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(offdiag)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(offdiag):
            if bits >> k & 1:
                leq[i][j] = True
        ok = True
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    ok = False
                if leq[a][b]:
                    for c in range(n):
                        if leq[b][c] and not leq[a][c]:
                            ok = False
        if ok:
            yield tuple(map(tuple, leq))


def brute_associative_tables(n):
    """Unpruned generate-then-filter enumeration (tiny n only)."""
    rng = range(n)
    for values in product(rng, repeat=n * n):
        mult = tuple(tuple(values[i * n + j] for j in rng) for i in rng)
        if all(mult[mult[a][b]][c] == mult[a][mult[b][c]]
               for a in rng for b in rng for c in rng):
            yield mult
    return


def naive_model_forms(n, require_involution=True, require_greatest=True):
    """Canonical forms of ALL valid models of order n by full
    generate-filter-dedupe; the independent completeness oracle."""
    forms = set()
    posets = list(all_posets(n))
    stars = [p for p in permutations(range(n)) if all(p[p[x]] == x for x in range(n))]
    for mult in brute_associative_tables(n):
        for leq in posets:
            compatible = all(
                not leq[a][b] or (leq[mult[a][c]][mult[b][c]] and leq[mult[c][a]][mult[c][b]])
                for a in range(n) for b in range(n) for c in range(n))
            if not compatible:
                continue
            if require_greatest and greatest_element(leq) is None:
                continue
            if require_involution:
                for star in stars:
                    if any(star[mult[a][b]] != mult[star[b]][star[a]]
                           for a in range(n) for b in range(n)):
                        continue
                    if any(leq[a][b] and not leq[star[a]][star[b]]
                           for a in range(n) for b in range(n)):
                        continue
                    raw = RawStructure(n=n, mult=mult, leq=leq, star=star)
                    forms.add(canonical_form(raw))
            else:
                forms.add(canonical_form(RawStructure(n=n, mult=mult, leq=leq)))
    return forms
