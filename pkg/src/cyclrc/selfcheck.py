"""Exhaustive small-length sweeps backing the structural identities.

Over every union of cyclotomic cosets for a fixed list of (q, n) pairs, the
sweeps confirm with exact oracles that

* the dual distance equals the distance of the complement-set code,
* the base-field code and the ambient-field code with the same defining set
  share one distance,
* the run bounds never exceed the true distance, and the subgroup-run dual
  criterion, whenever it fires, matches the oracle exactly.

These identities carry the whole construction pipeline, so the sweeps run in
the packaged selftest as well as the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import bounds
from .bounds import BettiSalaWitness
from .cyclic import (
    DEFAULT_BUDGET,
    CycContext,
    all_cyclotomic_cosets,
    code_from_defining_set,
    cyc_context,
    min_distance,
)
from .golden import CheckResult

SWEEP_PAIRS = ((2, 7), (2, 15), (3, 8), (3, 13), (4, 15), (5, 8))


def closed_sets(ctx: CycContext):
    """All unions of cyclotomic cosets, the empty and full set included."""
    cosets = all_cyclotomic_cosets(ctx)
    for mask in range(1 << len(cosets)):
        exps: list[int] = []
        for i, c in enumerate(cosets):
            if mask >> i & 1:
                exps.extend(c.exps)
        yield ctx.exponent_set(exps)


def _exact(code, budget: int):
    res = min_distance(code, budget)
    if res.undefined:
        return None
    assert res.exact is not None, f"sweep code [{code.n},{code.k}] not settled exactly"
    return res.exact


def run_dual_complement_sweep(budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    out = []
    for q, n in SWEEP_PAIRS:
        ctx = cyc_context(q, n)
        total = 0
        for S in closed_sets(ctx):
            code = code_from_defining_set(ctx, S)
            d_dual = _exact(code.dual_code(), budget)
            d_comp = _exact(code.complement_code(), budget)
            if d_dual != d_comp:
                out.append(CheckResult(
                    f"dual_complement q={q} n={n}", f"set {list(S.exps)}", False,
                    f"dual {d_dual} vs complement {d_comp}"))
            total += 1
        out.append(CheckResult(f"dual_complement q={q} n={n}",
                               f"{total} defining sets agree", True))
    return out


def run_field_jump_sweep(budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    out = []
    for q, n in SWEEP_PAIRS:
        ctx = cyc_context(q, n)
        total = 0
        for S in closed_sets(ctx):
            sub = code_from_defining_set(ctx, S, base="subfield")
            ext = code_from_defining_set(ctx, S, base="extension")
            d_sub = _exact(sub, budget)
            d_ext = _exact(ext, budget)
            if d_sub != d_ext:
                out.append(CheckResult(
                    f"field_jump q={q} n={n}", f"set {list(S.exps)}", False,
                    f"base field {d_sub} vs ambient {d_ext}"))
            total += 1
        out.append(CheckResult(f"field_jump q={q} n={n}",
                               f"{total} defining sets agree", True))
    return out


def _enumerate_bs_witnesses(exps: frozenset, n: int):
    units = bounds.units_mod(n)
    for m, dw in ((1, 2), (1, 3), (2, 2)):
        size = m * dw + (m + 1) * (dw - 1)
        if size > len(exps):
            continue
        for b in units:
            for u in range(n):
                w = BettiSalaWitness(u=u, b=b, m=m, delta=dw)
                if all(e in exps for e in w.exponents(n)):
                    yield w


def run_bound_soundness_sweep(budget: int = DEFAULT_BUDGET, rng_seed: int = 20240817) -> list[CheckResult]:
    out = []
    for q, n in SWEEP_PAIRS:
        ctx = cyc_context(q, n)
        total = fired = 0
        for S in closed_sets(ctx):
            if len(S) == n:
                continue  # zero code has no distance to bound
            code = code_from_defining_set(ctx, S)
            d = _exact(code, budget)
            lo, _ = bounds.bch_lower(S)
            if lo > d:
                out.append(CheckResult(f"bounds q={q} n={n}", f"run bound set {list(S.exps)}",
                                       False, f"bound {lo} exceeds distance {d}"))
            have = frozenset(S.exps)
            for w in _enumerate_bs_witnesses(have, n):
                bs = bounds.betti_sala_lower(S, w)
                if bs > d:
                    out.append(CheckResult(f"bounds q={q} n={n}",
                                           f"blocks bound set {list(S.exps)}", False,
                                           f"witness {w} gives {bs} above {d}"))
                    break
            # dual criterion against the oracle, over the ambient field
            ext = code_from_defining_set(ctx, S, base="extension")
            val = bounds.exact_dual_distance(S)
            if val is not None:
                fired += 1
                oracle = _exact(ext.dual_code(), budget)
                if oracle != val:
                    out.append(CheckResult(f"bounds q={q} n={n}",
                                           f"dual criterion set {list(S.exps)}", False,
                                           f"criterion {val} vs oracle {oracle}"))
            total += 1
        out.append(CheckResult(f"bounds q={q} n={n}",
                               f"{total} sets sound, dual criterion fired {fired}x", True))
    out.extend(_random_subgroup_sets(budget, rng_seed))
    return out


def _random_subgroup_sets(budget: int, seed: int) -> list[CheckResult]:
    """Random coset-plus-noise sets with n <= 24 for the dual criterion."""
    rng = np.random.default_rng(seed)
    out = []
    fired = total = 0
    for q, n in ((19, 18), (25, 24), (16, 15), (23, 22)):
        ctx = cyc_context(q, n)
        divisors = [d for d in range(2, n + 1) if n % d == 0]
        for _ in range(40):
            ell = int(rng.choice(divisors))
            s = n // ell
            t = int(rng.integers(0, s))
            exps = {(t + i * s) % n for i in range(ell)}
            extra = int(rng.integers(0, 4))
            exps.update(int(x) for x in rng.integers(0, n, extra))
            if len(exps) > 10:
                continue  # keep the oracle affordable
            A = ctx.exponent_set(exps)
            val = bounds.exact_dual_distance(A)
            total += 1
            if val is None:
                continue
            fired += 1
            ext = code_from_defining_set(ctx, A, base="extension")
            oracle = _exact(ext.dual_code(), budget)
            if oracle != val:
                out.append(CheckResult("random_subgroup_sets", f"q={q} n={n} set {sorted(exps)}",
                                       False, f"criterion {val} vs oracle {oracle}"))
    out.append(CheckResult("random_subgroup_sets",
                           f"{total} sampled, dual criterion fired {fired}x and matched", True))
    return out


def run_sweeps(budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    out = []
    out.extend(run_dual_complement_sweep(budget))
    out.extend(run_field_jump_sweep(budget))
    out.extend(run_bound_soundness_sweep(budget))
    return out
