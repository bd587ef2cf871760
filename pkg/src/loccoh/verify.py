"""Self-verification suites: every closed form against its oracle.

Each check sweeps a stated parameter range and either passes or produces a
machine-readable counterexample.  The ranges default to the acceptance
ranges and can be scaled with ``max_n`` / ``bound``.  The runner honors the
LOCCOH_THREADS environment variable for running independent checks in
parallel; output order is always declaration order.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import chain

from .characters import (
    SKEW,
    SYMM,
    all_labels,
    filtration_check,
    member,
    schur_dimension,
    witness_weight,
)
from .cohomology import (
    GENERAL,
    ambient_dimension,
    lcd,
    lcd_closed_form,
    support_poly,
    support_poly_from_ext,
    top_support,
)
from .extmult import ext_character, witness_ext_bott, witness_ext_closed, witness_ext_enum
from .partitions import (
    conjugate,
    dual,
    enumerate_box,
    enumerate_weights,
    padded,
    size,
)
from .qseries import LaurentPoly, gauss, gauss_enum

Check = tuple[bool, dict | None, str]


def check_gauss_identities(max_n: int | None = None, bound: int | None = None) -> Check:
    """Product formula vs box enumeration, complement, symmetry and
    palindromicity of the Gauss polynomials."""
    top = max_n or 12
    powers = (1, 2, 4, -4)
    for a in range(top + 1):
        for b in range(a + 1):
            for v in powers:
                closed = gauss(a, b, v)
                enum = gauss_enum(a, b, v)
                if closed != enum:
                    return False, {"a": a, "b": b, "v": v, "closed": closed.pairs(),
                                   "enum": enum.pairs()}, f"a<={top}"
                if closed != gauss(a, a - b, v):
                    return False, {"a": a, "b": b, "v": v, "identity": "symmetry"}, f"a<={top}"
                area = (a - b) * b
                complement = LaurentPoly(
                    [(v * (area - size(z)), 1) for z in enumerate_box(a - b, b)]
                )
                if closed != complement:
                    return False, {"a": a, "b": b, "v": v, "identity": "complement"}, f"a<={top}"
                plain = gauss(a, b, 1)
                if any(plain.coefficient(e) != plain.coefficient(area - e)
                       for e in range(area + 1)):
                    return False, {"a": a, "b": b, "identity": "palindromic"}, f"a<={top}"
    return True, None, f"0 <= b <= a <= {top}, v in {powers}"


def check_bott_predicate_agreement(max_n: int | None = None, bound: int | None = None) -> Check:
    """Sweep the Bott algorithm against the closed-form isotypic predicates.

    For every k <= n, every beta with at most n-k parts of size at most
    k+2 and every dominant alpha with entries in [-n-2, n+2], the algorithm
    hits the trivial weight (resp. the wedge weight of index s, where the
    predicate applies) for exactly the (alpha, beta) the predicate names,
    in degree |beta|.
    """
    top = max_n or 7
    checked = 0
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            r = n - k
            # weight multisets of delta + (0^s, (-1)^(n-s))
            targets = {
                frozenset(chain(range(n - s, n), range(-1, n - s - 1))): s
                for s in range(n - k, n + 1)
            }
            for beta in enumerate_box(r, k + 2):
                bp = padded(beta, r)
                tail = [bp[i] + (r - 1 - i) for i in range(r)]
                tailset = frozenset(tail)
                in_box = (not beta) or beta[0] <= k
                base = dual(padded(conjugate(beta), k)) if in_box else None
                sz = size(beta)
                pred_by_alpha: dict[tuple, int] = {}
                applicable = set()
                for s in range(n - k, n + 1):
                    if all(b >= n - s for b in bp):
                        applicable.add(s)
                        if in_box:
                            alpha = tuple(
                                a + (0 if i < s - n + k else -1) for i, a in enumerate(base)
                            )
                            pred_by_alpha[alpha] = s
                for alpha in enumerate_weights(k, -n - 2, n + 2):
                    head = [alpha[i] + (n - 1 - i) for i in range(k)]
                    full = tailset.union(head)
                    s_hit = targets.get(full) if len(full) == n else None
                    if s_hit is not None and s_hit not in applicable:
                        s_hit = None
                    if pred_by_alpha.get(alpha) != s_hit:
                        return False, {
                            "n": n, "k": k, "alpha": list(alpha), "beta": list(beta),
                            "predicate_s": pred_by_alpha.get(alpha), "algorithm_s": s_hit,
                        }, f"n<={top}"
                    if s_hit is not None:
                        degree = sum(1 for a in head for b in tail if a < b)
                        if degree != sz:
                            return False, {
                                "n": n, "k": k, "alpha": list(alpha), "beta": list(beta),
                                "degree": degree, "expected_degree": sz,
                            }, f"n<={top}"
                    checked += 1
    return True, None, f"n<={top}, beta in P(n-k,k+2), alpha entries in [-n-2,n+2] ({checked} pairs)"


def check_example_reproduction(max_n: int | None = None, bound: int | None = None) -> Check:
    """The symmetric n=3, x=(2,2,0), p=1 subquotient: its fourth Ext module
    is exactly the irreducible of highest weight (5,5,4), of dimension 3."""
    window = bound or 14
    gc = ext_character(SYMM, 3, (2, 2, 0), 1, window)
    got = gc.at(4)
    if got != Counter({(5, 5, 4): 1}):
        return False, {"ext4": sorted((list(w), c) for w, c in got.items())}, f"D={window}"
    if schur_dimension((5, 5, 4)) != 3:
        return False, {"dim": schur_dimension((5, 5, 4))}, f"D={window}"
    return True, None, f"symm n=3 x=(2,2,0) p=1, window D={window}"


def _triple_cases(max_skew_n: int, max_symm_n: int):
    for n in range(2, max_skew_n + 1):
        m = n // 2
        for p in range(m):
            for s in range(m + 1):
                yield SKEW, n, p, s, None
    for n in range(1, max_symm_n + 1):
        for p in range(n):
            for s in range(n - p, n + 1):
                for j in ((1, 2) if s < n else (None,)):
                    yield SYMM, n, p, s, j


def check_ext_triple_agreement(max_n: int | None = None, bound: int | None = None) -> Check:
    """Closed form == box enumeration == sheaf cohomology for every witness
    multiplicity, over every valid index."""
    skew_top = max_n or 8
    symm_top = max_n or 7
    count = 0
    for space, n, p, s, j in _triple_cases(skew_top, symm_top):
        closed = witness_ext_closed(space, n, p, s, j)
        enum = witness_ext_enum(space, n, p, s, j)
        via_bott = witness_ext_bott(space, n, p, s, j)
        if not closed == enum == via_bott:
            return False, {
                "space": space, "n": n, "p": p, "s": s, "flavor": j,
                "closed": closed.pairs(), "enum": enum.pairs(), "bott": via_bott.pairs(),
            }, f"skew n<={skew_top}, symm n<={symm_top}"
        if any(c < 0 for _, c in closed.pairs()):
            return False, {"space": space, "n": n, "p": p, "s": s,
                           "poly": closed.pairs()}, "positivity"
        count += 1
    return True, None, f"skew n<={skew_top}, symm n<={symm_top} ({count} index tuples)"


def check_assembly_agreement(max_n: int | None = None, bound: int | None = None) -> Check:
    """Main closed forms against the Ext assembly, plus the forced
    single-term shape at p=0 for all three spaces."""
    skew_top = max_n or 8
    symm_top = max_n or 7
    for n in range(2, skew_top + 1):
        for p in range(n // 2):
            a, b = support_poly(SKEW, n, p), support_poly_from_ext(SKEW, n, p)
            if a.terms != b.terms:
                return False, {"space": SKEW, "n": n, "p": p}, "assembly"
    for n in range(1, symm_top + 1):
        for p in range(n):
            a, b = support_poly(SYMM, n, p), support_poly_from_ext(SYMM, n, p)
            if a.terms != b.terms:
                return False, {"space": SYMM, "n": n, "p": p}, "assembly"
    for n in range(1, 11):
        for m in range(n, 11):
            hp = support_poly(GENERAL, n, 0, m)
            if set(hp.terms) != {0} or hp.terms[0] != LaurentPoly.q(m * n):
                return False, {"space": GENERAL, "n": n, "m": m, "p": 0}, "p=0 shape"
    for space, top in ((SKEW, skew_top), (SYMM, symm_top)):
        for n in range(1, top + 1):
            if space == SKEW and n < 2:
                continue
            hp = support_poly(space, n, 0)
            expected = LaurentPoly.q(ambient_dimension(space, n))
            if set(hp.terms) != {0} or hp.terms[0] != expected:
                return False, {"space": space, "n": n, "p": 0}, "p=0 shape"
    return True, None, f"skew n<={skew_top}, symm n<={symm_top}, general m,n<=10"


def check_lcd_closed_forms(max_n: int | None = None, bound: int | None = None) -> Check:
    """Top degree of the main displays against the one-line dimension
    formulas, and the top-degree support for symmetric odd p < n-1."""
    top = max_n or 10
    for n in range(1, top + 1):
        for m in range(n, top + 1):
            for p in range(n):
                if lcd(GENERAL, n, p, m) != lcd_closed_form(GENERAL, n, p, m):
                    return False, {"space": GENERAL, "n": n, "m": m, "p": p}, f"n,m<={top}"
    for n in range(2, top + 1):
        for p in range(n // 2):
            if lcd(SKEW, n, p) != lcd_closed_form(SKEW, n, p):
                return False, {"space": SKEW, "n": n, "p": p}, f"n<={top}"
    for n in range(1, top + 1):
        for p in range(n):
            if lcd(SYMM, n, p) != lcd_closed_form(SYMM, n, p):
                return False, {"space": SYMM, "n": n, "p": p}, f"n<={top}"
            if p % 2 and p < n - 1 and top_support(SYMM, n, p) != [1]:
                return False, {"space": SYMM, "n": n, "p": p,
                               "top_support": top_support(SYMM, n, p)}, f"n<={top}"
    return True, None, f"all spaces, n,m <= {top}, every valid p"


def check_witness_exclusivity(max_n: int | None = None, bound: int | None = None) -> Check:
    """witness_weight(L) lies in the weight set of L' iff L == L'."""
    top = max_n or 10
    for n in range(1, top + 1):
        for space in (SKEW, SYMM):
            labels = all_labels(space, n)
            for L in labels:
                w = witness_weight(L)
                for Lp in labels:
                    if member(Lp, w) != (L == Lp):
                        return False, {"n": n, "space": space, "L": repr(L),
                                       "Lprime": repr(Lp), "witness": list(w)}, f"n<={top}"
    return True, None, f"skew and symm, n<={top}, all label pairs"


def check_skew_exponent_parity(max_n: int | None = None, bound: int | None = None) -> Check:
    """Every exponent of every skew witness multiplicity is congruent to
    m-p mod 2 (the degeneration argument at witness level)."""
    top = max_n or 8
    for n in range(2, top + 1):
        m = n // 2
        for p in range(m):
            for s in range(m + 1):
                poly = witness_ext_closed(SKEW, n, p, s)
                if any((e - (m - p)) % 2 for e in poly.exponents()):
                    return False, {"n": n, "p": p, "s": s,
                                   "exponents": poly.exponents()}, f"n<={top}"
    return True, None, f"skew n<={top}, all valid (p, s)"


def check_nondegeneracy_witness(max_n: int | None = None, bound: int | None = None) -> Check:
    """(5,5,4) shows up in the Ext character of the symmetric n=3 p=1
    subquotient yet belongs to no simple module's weight set, so it must
    cancel in every assembled local cohomology class."""
    window = bound or 14
    gc = ext_character(SYMM, 3, (2, 2, 0), 1, window)
    seen = any((5, 5, 4) in gc.at(d) for d in gc.degrees())
    if not seen:
        return False, {"missing": [5, 5, 4]}, f"D={window}"
    rejecting = [not member(L, (5, 5, 4)) for L in all_labels(SYMM, 3)]
    if not all(rejecting):
        return False, {"accepted_by": rejecting.index(False)}, "7 labels"
    return True, None, f"window D={window}, all 7 simple labels of n=3"


def check_filtration(max_n: int | None = None, bound: int | None = None) -> Check:
    """Truncated filtration consistency for symm n<=4 and skew n<=6."""
    window = bound or 10
    symm_top = max_n or 4
    skew_top = max_n or 6
    for n in range(1, symm_top + 1):
        for p in range(n):
            rep = filtration_check(SYMM, n, p, window)
            if not rep.ok:
                return False, rep.mismatch, f"symm n={n} p={p} D={window}"
    for n in range(2, skew_top + 1):
        for p in range(n // 2):
            rep = filtration_check(SKEW, n, p, window)
            if not rep.ok:
                return False, rep.mismatch, f"skew n={n} p={p} D={window}"
    return True, None, f"symm n<={symm_top}, skew n<={skew_top}, D={window}"


CHECKS: dict[str, tuple] = {
    "gauss-identities": (check_gauss_identities, "qseries"),
    "bott-predicate-agreement": (check_bott_predicate_agreement, "bott"),
    "example-reproduction": (check_example_reproduction, "ext"),
    "ext-triple-agreement": (check_ext_triple_agreement, "ext"),
    "assembly-agreement": (check_assembly_agreement, "loccoh"),
    "lcd-closed-forms": (check_lcd_closed_forms, "loccoh"),
    "witness-exclusivity": (check_witness_exclusivity, "characters"),
    "skew-exponent-parity": (check_skew_exponent_parity, "ext"),
    "nondegeneracy-witness": (check_nondegeneracy_witness, "ext"),
    "filtration": (check_filtration, "filtration"),
}

SUITES = ("all", "qseries", "bott", "characters", "ext", "loccoh", "filtration")


@dataclass
class VerifyReport:
    """One line of the verification report."""

    name: str
    params: str
    passed: bool
    counterexample: dict | None
    seconds: float


def _run_one(item: tuple[str, int | None, int | None]) -> VerifyReport:
    name, max_n, bound = item
    fn = CHECKS[name][0]
    t0 = time.perf_counter()
    passed, counterexample, params = fn(max_n=max_n, bound=bound)
    return VerifyReport(name, params, passed, counterexample, time.perf_counter() - t0)


def run_suite(
    suite: str = "all",
    max_n: int | None = None,
    bound: int | None = None,
    threads: int | None = None,
) -> list[VerifyReport]:
    """Run the named suite and return reports in declaration order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    names = [n for n, (_, tag) in CHECKS.items() if suite in ("all", tag)]
    items = [(name, max_n, bound) for name in names]
    if threads is None:
        try:
            threads = int(os.environ.get("LOCCOH_THREADS", "1"))
        except ValueError:
            threads = 1
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_one, items))
    return [_run_one(item) for item in items]
