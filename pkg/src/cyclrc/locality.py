"""Locality certification for cyclic codes.

The constructive route: when the defining set of a code contains the product
of two root sets, shifted copies of one low-weight dual codeword of the
anchor code yield concrete repair groups, and a short consecutive run in the
second set forces enough column independence inside each group to tolerate
delta-1 erasures.  Certificates carry the dual word, every repair group, and
the per-group independence checks.

The definition-level verifier is the independent oracle: it knows nothing of
the construction and simply checks punctured distances of candidate groups
over the code's own base field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from . import bounds, linalg
from .cyclic import (
    CombinatorialBudgetExceeded,
    CyclicCode,
    DEFAULT_BUDGET,
    ExponentSet,
    code_from_defining_set,
    min_distance,
    min_weight_word,
    product_set,
)


class ProductNotContained(ValueError):
    pass


class DistanceOrderingViolated(ValueError):
    pass


class IndependenceCheckFailed(RuntimeError):
    pass


class BudgetExceededInconclusive(RuntimeError):
    pass


class NotDivisor(ValueError):
    pass


@dataclass(frozen=True)
class LocalityCertificate:
    r: int
    delta: int
    dual_distance: int  # weight of the anchor dual word backing the groups
    run_distance: int  # exact distance of the run code
    dual_exact: bool  # dual_distance is the exact dual distance of the anchor
    dual_lower: int  # certified lower bound on the anchor dual distance
    groups: tuple[tuple[int, ...], ...]
    h0_support: tuple[int, ...]
    h0_word: tuple[int, ...]
    anchor_exps: tuple[int, ...]
    run_exps: tuple[int, ...]
    independence_checked: bool
    group_mode: str  # 'subgroup_partition' or 'shift_cover'

    @property
    def group_size_bound(self) -> int:
        return self.r + self.delta - 1

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "delta": self.delta,
            "dA_perp": self.dual_distance,
            "dB": self.run_distance,
            "groups": [list(g) for g in self.groups],
            "evidence": {
                "h0_support": list(self.h0_support),
                "h0_word": list(self.h0_word),
                "independence_checked": self.independence_checked,
                "dual_exact": self.dual_exact,
                "dual_lower": self.dual_lower,
                "anchor_exponents": list(self.anchor_exps),
                "run_exponents": list(self.run_exps),
                "group_mode": self.group_mode,
            },
        }


def check_delta_independence(F, M, delta: int) -> bool:
    """True iff every delta-1 columns of M are linearly independent."""
    M = np.asarray(M, dtype=np.int64)
    t = delta - 1
    if t == 0:
        return True
    if M.shape[1] < t:
        return False
    if M.shape[0] < t:
        return False  # rank can never reach t
    for block in _combo_blocks(M.shape[1], t):
        mats = M[:, block].transpose(1, 0, 2)
        if (linalg.batch_rank(F, mats) < t).any():
            return False
    return True


def _combo_blocks(n: int, w: int, chunk: int = 4096):
    it = itertools.combinations(range(n), w)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def repair_groups_from_subgroup(t: int, s: int, ctx) -> list[tuple[int, ...]]:
    """Partition of the n coordinates into n/s residue classes of size s.

    These are the supports of the s-weight dual words obtained by summing the
    rows of the coset evaluation matrix (shift t only scales the values, so
    the supports depend on s alone).
    """
    n = ctx.n
    if s < 1 or n % s != 0:
        raise NotDivisor(f"group size {s} does not divide n={n}")
    ell = n // s
    return [tuple(range(c, n, ell)) for c in range(ell)]


def _subgroup_word(ctx, ell: int, t: int) -> np.ndarray:
    """Dual word from summing the rows of the order-ell coset matrix."""
    n = ctx.n
    F = ctx.field
    s = n // ell
    word = np.zeros(n, dtype=np.int64)
    scal = 0
    for _ in range(ell % ctx.p):
        scal = F.add(scal, 1)
    assert scal != 0  # gcd(ell, p) = 1 because ell | n and gcd(n, q) = 1
    for j in range(0, n, ell):
        word[j] = F.mul(scal, ctx.root(j * t))
    return word


# caches keyed by (q, n, exponents); certificates must be deterministic anyway
_dual_word_cache: dict = {}
_run_dist_cache: dict = {}


def anchor_dual_word(anchor: ExponentSet, budget: int = DEFAULT_BUDGET):
    """Low-weight dual codeword of the anchor's ambient code.

    Returns (word, support, weight, exact, lower):
    * exact=True: weight is the exact dual distance (subgroup-run criterion
      or an affordable exact oracle), support lexicographically canonical;
    * exact=False: the subgroup-coset word is only an upper witness and
      `lower` carries the certified run lower bound on the dual distance.
    """
    ctx = anchor.ctx
    key = (ctx.q, ctx.n, anchor.exps)
    if key in _dual_word_cache:
        return _dual_word_cache[key]
    n = ctx.n
    exact_val = bounds.exact_dual_distance(anchor)
    cosets = bounds.subgroup_coset_in(anchor)
    result = None
    if exact_val is not None and any(n // ell == exact_val for ell, _ in cosets):
        ell, t = next((e, t) for e, t in cosets if n // e == exact_val)
        word = _subgroup_word(ctx, ell, t)
        support = tuple(int(i) for i in np.nonzero(word)[0])
        result = (word, support, exact_val, True, exact_val)
    if result is None:
        ca = code_from_defining_set(ctx, anchor, base="extension")
        dual = ca.dual_code()
        try:
            d, word, support = min_weight_word(dual, budget)
            if exact_val is not None and d != exact_val:
                raise AssertionError(
                    f"subgroup-run criterion says dual distance {exact_val}, oracle found {d}"
                )
            result = (word, support, d, True, d)
        except CombinatorialBudgetExceeded:
            lower, _ = bounds.bch_lower(dual.defining)
            if not cosets:
                raise BudgetExceededInconclusive(
                    f"no affordable dual-distance oracle and no subgroup witness for n={n}"
                )
            ell, t = cosets[0]  # largest order = lightest witness word
            word = _subgroup_word(ctx, ell, t)
            support = tuple(int(i) for i in np.nonzero(word)[0])
            result = (word, support, n // ell, False, min(lower, n // ell))
    _dual_word_cache[key] = result
    return result


def run_code_distance(run: ExponentSet, budget: int = DEFAULT_BUDGET) -> int:
    ctx = run.ctx
    key = (ctx.q, ctx.n, run.exps)
    if key not in _run_dist_cache:
        cb = code_from_defining_set(ctx, run, base="extension")
        res = min_distance(cb, budget)
        if res.exact is None:
            raise BudgetExceededInconclusive("run-code distance not settled within budget")
        _run_dist_cache[key] = res.exact
    return _run_dist_cache[key]


def locality_from_product(
    anchor: ExponentSet,
    run: ExponentSet,
    target: CyclicCode,
    budget: int = DEFAULT_BUDGET,
) -> LocalityCertificate:
    """Certificate that `target` tolerates delta-1 erasures in groups of
    r+delta-1 coordinates, where r = w(h0) - d_run + 1.

    The defining set of `target` must contain the product of the two sets.
    Every group is materialized and its independence condition is checked;
    an independence failure aborts (it would mean an implementation bug, and
    a silently downgraded certificate would be worthless).
    """
    ctx = anchor.ctx
    if run.ctx is not ctx or target.ctx is not ctx:
        raise ValueError("anchor, run and target must share one context")
    ab = product_set(anchor, run)
    if not ab.is_subset(target.defining):
        raise ProductNotContained(
            f"product exponents {sorted(set(ab.exps) - set(target.defining.exps))} "
            "missing from the target defining set"
        )
    d_run = run_code_distance(run, budget)
    word, support, w, dual_exact, dual_lower = anchor_dual_word(anchor, budget)
    if w < d_run:
        raise DistanceOrderingViolated(f"dual word weight {w} below run distance {d_run}")
    r = w - d_run + 1
    delta = d_run
    n = ctx.n
    F = ctx.field

    # deduplicated shift cover; for subgroup-support words this is exactly
    # the partition into residue classes
    seen = set()
    groups_list = []
    for s in range(n):
        g = tuple(sorted((i + s) % n for i in support))
        if g not in seen:
            seen.add(g)
            groups_list.append(g)
    groups = tuple(sorted(groups_list))
    disjoint = sum(len(g) for g in groups) == n
    group_mode = "subgroup_partition" if disjoint else "shift_cover"

    covered = set()
    for g in groups:
        covered.update(g)
    assert covered == set(range(n)), "repair groups fail to cover all coordinates"

    # h0 itself is only a dual word of the anchor code; the rows entering the
    # certificate are its run-exponent translates, which land in the dual of
    # any code whose defining set contains the product set
    G = target.generator_matrix()
    run_rows = np.array(run.exps, dtype=np.int64)
    for shift in _group_shifts(groups, support, n):
        shifted = np.roll(word, shift)
        rows = _local_parity_rows(ctx, shifted, run_rows)
        sup = np.nonzero(shifted)[0]
        for e_row in rows:
            if set(np.nonzero(e_row)[0]) != set(sup):
                raise IndependenceCheckFailed("shifted rows do not share the base support")
        if linalg.mat_mul(F, G, rows.T).any():
            raise IndependenceCheckFailed("local parity row leaves the dual code")
        H_I = rows[:, sup]
        if not check_delta_independence(F, H_I, delta):
            raise IndependenceCheckFailed(
                f"{delta - 1} columns of a local parity block are dependent"
            )

    return LocalityCertificate(
        r=r,
        delta=delta,
        dual_distance=w,
        run_distance=d_run,
        dual_exact=dual_exact,
        dual_lower=dual_lower,
        groups=groups,
        h0_support=tuple(int(x) for x in support),
        h0_word=tuple(int(x) for x in word),
        anchor_exps=anchor.exps,
        run_exps=run.exps,
        independence_checked=True,
        group_mode=group_mode,
    )


def _group_shifts(groups, support, n: int) -> list[int]:
    """One representative shift per distinct group."""
    base = tuple(sorted(support))
    out = []
    seen = set()
    for s in range(n):
        g = tuple(sorted((i + s) % n for i in base))
        if g not in seen:
            seen.add(g)
            out.append(s)
    return out


def _local_parity_rows(ctx, word: np.ndarray, run_exps: np.ndarray) -> np.ndarray:
    """Rows alpha^(j*e) * word_j for each run exponent e."""
    n = ctx.n
    F = ctx.field
    powers = ctx.root_powers(run_exps, range(n))  # (v, n)
    return F.vmul(powers, word[None, :])


# ---------------------------------------------------------------------------
# Definition-level verifier (independent oracle).


def punctured_distance_at_least(code: CyclicCode, group, delta: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Decide d(C|_group) >= delta by scanning the punctured parity columns."""
    F = code.field
    group = sorted({int(i) for i in group})
    Gs = code.generator_matrix()[:, group]
    R, piv = linalg.rref(F, Gs)
    k_s = R.shape[0]
    if k_s == 0:
        return True  # zero punctured code, vacuously tolerant
    if delta <= 1:
        return True
    if len(group) < delta:
        return False  # nonzero code on fewer than delta coordinates
    H = linalg.nullspace(F, R)
    if H.shape[0] == 0:
        return False  # punctured code is the full space, distance 1
    t = delta - 1
    cost = comb(len(group), t) * H.shape[0] * t * t
    if cost > budget:
        raise BudgetExceededInconclusive(f"punctured scan needs ~{cost:.2e} ops")
    for block in _combo_blocks(len(group), t):
        mats = H[:, block].transpose(1, 0, 2)
        if (linalg.batch_rank(F, mats) < t).any():
            return False
    return True


def verify_locality_exhaustive(
    code: CyclicCode,
    r: int,
    delta: int,
    budget: int = DEFAULT_BUDGET,
    hint_groups=None,
) -> bool:
    """Definition-level check: every coordinate sits in some group of at most
    r+delta-1 coordinates whose punctured code has distance >= delta.

    Tries hinted groups first, then cyclic shifts of unit-step windows, then
    (small lengths only) the full subset search.  Distinguishes a definitive
    False from running out of budget.
    """
    if delta < 2:
        raise ValueError("locality needs delta >= 2")
    n = code.n
    size = r + delta - 1
    if size > n:
        raise ValueError("group size exceeds the code length")
    good: set[int] = set()
    tested: dict[tuple[int, ...], bool] = {}

    def try_group(g) -> bool:
        g = tuple(sorted(int(x) % n for x in g))
        if len(g) > size:
            return False
        if g not in tested:
            tested[g] = punctured_distance_at_least(code, g, delta, budget)
        if tested[g]:
            good.update(g)
        return tested[g]

    for g in hint_groups or ():
        try_group(g)
        if len(good) == n:
            return True

    for b in bounds.units_mod(n):
        for u in range(n):
            if len(good) == n:
                return True
            if all(((u + i * b) % n) in good for i in range(size)):
                continue
            try_group([(u + i * b) % n for i in range(size)])
        if len(good) == n:
            return True

    if len(good) == n:
        return True
    # full search for the still-uncovered coordinates
    if comb(n - 1, size - 1) > 200000:
        raise BudgetExceededInconclusive(
            f"{n - len(good)} coordinates unresolved and full subset search too large"
        )
    for i in sorted(set(range(n)) - good):
        found = False
        for rest in itertools.combinations([j for j in range(n) if j != i], size - 1):
            if try_group((i,) + rest):
                found = True
                break
        if not found:
            return False
    return True


def verify_certificate_groups(code: CyclicCode, cert: LocalityCertificate, budget: int = DEFAULT_BUDGET) -> bool:
    """Certificate soundness: coverage, group sizes, punctured distances."""
    n = code.n
    covered = set()
    for g in cert.groups:
        if len(g) > cert.group_size_bound:
            return False
        covered.update(g)
        if not punctured_distance_at_least(code, g, cert.delta, budget):
            return False
    return covered == set(range(n))
