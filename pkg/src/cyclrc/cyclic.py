"""Cyclic codes over GF(q) given by exponent sets of roots of unity.

A CycContext fixes the base field size q, the length n with gcd(n, q) = 1,
and the ambient field GF(q^d) (d the order of q mod n) containing all n-th
roots of unity.  Exponent sets live in Z_n; codes carry their generator
polynomial over the ambient field with coefficients verified to lie in the
base field when the code is declared over it.

Minimum distances come from a dispatcher that picks the cheapest exact
strategy fitting the work budget:

* message-space enumeration (dimension small),
* zero-core enumeration for codes over the ambient field: every codeword is
  an evaluation of a polynomial supported on the nonzero exponents, and any
  minimum-weight word vanishes on at least k-1 points, so sweeping (k-1)-
  subsets that contain 0 (after a cyclic shift) hits every candidate,
* support scans that test parity-check columns for dependence, climbing from
  the run lower bound to the Singleton ceiling,

falling back to a certified (lower, upper) sandwich when nothing fits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Optional

import numpy as np

from . import bounds, linalg
from .field import FieldSpec, field_create, prime_power_split
from .poly import Polynomial, product_from_roots, reciprocal

DEFAULT_BUDGET = 10**8


class NotQClosed(ValueError):
    pass


class CoefficientLeak(RuntimeError):
    pass


class EmptySupport(ValueError):
    pass


class BudgetTooSmall(ValueError):
    """Contractual: the bound computation itself never exceeds any sane budget."""


class CombinatorialBudgetExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def cyc_context(q: int, n: int) -> "CycContext":
    return CycContext(q, n)


class CycContext:
    """Length-n cyclic code environment over GF(q) and its ambient field."""

    def __init__(self, q: int, n: int):
        p, m = prime_power_split(q)
        if n < 1 or gcd(n, q) != 1:
            raise ValueError(f"need gcd(n, q) = 1, got n={n}, q={q}")
        self.q = q
        self.n = n
        self.p = p
        self.m = m
        self.d = bounds_ord(q, n)
        self.field = field_create(p, m * self.d)
        from .field import primitive_nth_root

        self.alpha = primitive_nth_root(self.field, n).repr
        self._alpha_log = int(self.field._log[self.alpha])
        self.base_elements = self.field.subfield_elements(q)
        self._code_cache: dict = {}

    def root(self, j: int) -> int:
        """Element index of the j-th power of the primitive n-th root."""
        return int(self.field.vpow_gen(self._alpha_log * (j % self.n)))

    def root_powers(self, exps, mults) -> np.ndarray:
        """Matrix alpha^(e*i) for e in exps (rows) and i in mults (cols)."""
        e = np.asarray(exps, dtype=np.int64).reshape(-1, 1)
        i = np.asarray(mults, dtype=np.int64).reshape(1, -1)
        return self.field.vpow_gen(self._alpha_log * (e * i % self.n))

    def exponent_set(self, exps) -> "ExponentSet":
        return ExponentSet.of(self, exps)

    def __repr__(self):
        return f"CycContext(q={self.q}, n={self.n}, ambient=GF({self.field.q}))"


def bounds_ord(q: int, n: int) -> int:
    from .field import ord_mod

    return ord_mod(q, n)


@dataclass(frozen=True)
class ExponentSet:
    """Sorted distinct residues mod n standing for a set of n-th roots."""

    ctx: CycContext
    exps: tuple[int, ...]

    @staticmethod
    def of(ctx: CycContext, exps) -> "ExponentSet":
        return ExponentSet(ctx, tuple(sorted({int(e) % ctx.n for e in exps})))

    def __len__(self):
        return len(self.exps)

    def __contains__(self, e: int) -> bool:
        return (e % self.ctx.n) in set(self.exps)

    def __iter__(self):
        return iter(self.exps)

    def union(self, other: "ExponentSet") -> "ExponentSet":
        return ExponentSet.of(self.ctx, self.exps + other.exps)

    def complement(self) -> "ExponentSet":
        full = set(range(self.ctx.n))
        return ExponentSet.of(self.ctx, full - set(self.exps))

    def negate(self) -> "ExponentSet":
        return ExponentSet.of(self.ctx, [-e for e in self.exps])

    def shift(self, s: int) -> "ExponentSet":
        return ExponentSet.of(self.ctx, [e + s for e in self.exps])

    def is_subset(self, other: "ExponentSet") -> bool:
        return set(self.exps) <= set(other.exps)


def cyclotomic_coset(s: int, ctx: CycContext) -> ExponentSet:
    """Orbit of s under multiplication by q modulo n."""
    n, q = ctx.n, ctx.q
    s %= n
    out = [s]
    x = (s * q) % n
    while x != s:
        out.append(x)
        x = (x * q) % n
    return ExponentSet.of(ctx, out)


def all_cyclotomic_cosets(ctx: CycContext) -> list[ExponentSet]:
    seen: set[int] = set()
    out = []
    for s in range(ctx.n):
        if s not in seen:
            c = cyclotomic_coset(s, ctx)
            seen.update(c.exps)
            out.append(c)
    return out


def is_q_closed(S: ExponentSet) -> bool:
    n, q = S.ctx.n, S.ctx.q
    have = set(S.exps)
    return all((e * q) % n in have for e in have)


def product_set(A: ExponentSet, B: ExponentSet) -> ExponentSet:
    """Exponent-level sumset, equal to the root-level product set."""
    if A.ctx is not B.ctx:
        raise ValueError("product of exponent sets from different contexts")
    n = A.ctx.n
    return ExponentSet.of(A.ctx, [(a + b) % n for a in A.exps for b in B.exps])


@dataclass
class DistanceResult:
    lower: int
    upper: int
    exact: Optional[int]
    method: str
    undefined: bool = False

    def __post_init__(self):
        if not self.undefined and self.exact is not None:
            assert self.lower <= self.exact <= self.upper

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "method": self.method,
            "undefined": self.undefined,
        }


class CyclicCode:
    """Cyclic code fixed by a complete defining set of root exponents."""

    def __init__(self, ctx: CycContext, defining: ExponentSet, base_q: int, gen: Polynomial):
        self.ctx = ctx
        self.defining = defining
        self.base_q = base_q
        self.gen = gen
        self.k = ctx.n - len(defining)
        self._dual: Optional[CyclicCode] = None
        self._gen_matrix: Optional[np.ndarray] = None
        self._roots_matrix: Optional[np.ndarray] = None

    # -- basic structure ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def field(self) -> FieldSpec:
        return self.ctx.field

    @property
    def is_subfield_code(self) -> bool:
        return self.base_q == self.ctx.q and self.ctx.d > 1

    @property
    def base_elements(self) -> np.ndarray:
        return self.field.subfield_elements(self.base_q)

    def generator_matrix(self) -> np.ndarray:
        if self._gen_matrix is None:
            n, k = self.n, self.k
            G = np.zeros((k, n), dtype=np.int64)
            cs = np.array(self.gen.coeffs, dtype=np.int64)
            for i in range(k):
                G[i, i : i + len(cs)] = cs
            self._gen_matrix = G
        return self._gen_matrix

    def parity_check_matrix(self) -> np.ndarray:
        """Generator matrix of the dual; full rank n-k."""
        return self.dual_code().generator_matrix()

    def roots_parity_matrix(self) -> np.ndarray:
        """Rows alpha^(e*i) for defining exponents e; ambient-field checks."""
        if self._roots_matrix is None:
            self._roots_matrix = self.ctx.root_powers(self.defining.exps, range(self.n))
        return self._roots_matrix

    def encode(self, msg) -> np.ndarray:
        msg = [int(x) for x in msg]
        assert len(msg) == self.k
        mp = Polynomial.make(self.field, msg)
        cw = mp * self.gen
        out = np.zeros(self.n, dtype=np.int64)
        out[: len(cw.coeffs)] = cw.coeffs
        return out

    def to_dict(self) -> dict:
        return {
            "q": self.base_q,
            "n": self.n,
            "defining_exponents": list(self.defining.exps),
            "generator_coeffs": list(self.gen.coeffs),
            "k": self.k,
        }

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.k}] over GF({self.base_q}))"

    # -- derived codes ------------------------------------------------------

    def dual_code(self) -> "CyclicCode":
        if self._dual is None:
            n, k = self.n, self.k
            nonzeros = self.defining.complement()
            dual_def = nonzeros.negate()
            dual = code_from_defining_set(
                self.ctx, dual_def, base="subfield" if self.base_q == self.ctx.q else "extension"
            )
            # cross-check against the reversed parity-check polynomial
            xn1 = Polynomial.x_pow_minus_one(self.field, n)
            h, rem = divmod(xn1, self.gen)
            if not rem.is_zero():
                raise CoefficientLeak("generator does not divide x^n - 1")
            hstar = reciprocal(h, k).monic()
            if hstar != dual.gen:
                raise CoefficientLeak("reciprocal parity polynomial disagrees with dual defining set")
            prod = linalg.mat_mul(self.field, self.generator_matrix(), dual.generator_matrix().T)
            if prod.any():
                raise CoefficientLeak("dual generator matrix fails orthogonality")
            self._dual = dual
        return self._dual

    def complement_code(self) -> "CyclicCode":
        comp = self.defining.complement()
        return code_from_defining_set(
            self.ctx, comp, base="subfield" if self.base_q == self.ctx.q else "extension"
        )

    def puncture(self, support) -> np.ndarray:
        """Row-reduced generator matrix of the projection onto `support`."""
        support = sorted({int(s) for s in support})
        if not support:
            raise EmptySupport("puncturing support is empty")
        if support[0] < 0 or support[-1] >= self.n:
            raise ValueError("support outside coordinate range")
        sub = self.generator_matrix()[:, support]
        R, _ = linalg.rref(self.field, sub)
        return R

    # -- distance machinery --------------------------------------------------

    def min_distance(self, budget: int = DEFAULT_BUDGET, witness=None, upper_hints=()) -> DistanceResult:
        return min_distance(self, budget=budget, witness=witness, upper_hints=upper_hints)

    def has_weight_at_most(self, w: int, budget: int = DEFAULT_BUDGET) -> bool:
        return has_weight_at_most(self, w, budget=budget)


def code_from_defining_set(ctx: CycContext, S: ExponentSet, base: str = "subfield") -> CyclicCode:
    """Build the cyclic code whose generator vanishes exactly on S's roots.

    Codes are immutable and cached per context, so repeated requests (duals,
    complements, sweep revisits) share one object and its lazy matrices.
    """
    if base not in ("subfield", "extension"):
        raise ValueError("base must be 'subfield' or 'extension'")
    cached = ctx._code_cache.get((S.exps, base))
    if cached is not None:
        return cached
    if base == "subfield" and not is_q_closed(S):
        bad = next(e for e in S.exps if (e * ctx.q) % ctx.n not in set(S.exps))
        coset = cyclotomic_coset(bad, ctx)
        raise NotQClosed(
            f"defining set is not closed under multiplication by {ctx.q} mod {ctx.n}: "
            f"exponent {bad} needs the full coset {list(coset.exps)}"
        )
    roots = [ctx.root(j) for j in S.exps]
    gen = product_from_roots(ctx.field, roots)
    base_q = ctx.q if base == "subfield" else ctx.field.q
    if base == "subfield":
        from .field import is_in_subfield

        for c in gen.coeffs:
            if not is_in_subfield(ctx.field.el(c), ctx.q):
                raise CoefficientLeak(
                    f"generator coefficient {c} escapes GF({ctx.q}) despite closed defining set"
                )
    code = CyclicCode(ctx, S, base_q, gen)
    ctx._code_cache[(S.exps, base)] = code
    return code


# ---------------------------------------------------------------------------
# Distance strategies.


def _strategy_costs(code: CyclicCode, lower: int, upper: int) -> dict[str, float]:
    n, k = code.n, code.k
    qb = code.base_q
    costs: dict[str, float] = {}
    try:
        costs["exhaustive"] = float(qb**k) * n
    except OverflowError:
        costs["exhaustive"] = float("inf")
    if code.base_q == code.ctx.field.q and k >= 2:
        costs["zero_core"] = float(comb(n - 1, k - 2)) * (k * (k - 1) ** 2 + n * k)
    else:
        costs["zero_core"] = float("inf")
    sr = 0.0
    for w in range(max(1, lower), upper + 1):
        sr += comb(n, w) * (n - k) * w * min(w, n - k)
    costs["support_rank"] = sr
    return costs


def min_distance(code: CyclicCode, budget: int = DEFAULT_BUDGET, witness=None, upper_hints=()) -> DistanceResult:
    n, k = code.n, code.k
    if budget < n * n:
        raise BudgetTooSmall(f"budget {budget} cannot cover the O(n^2) bound scan")
    if k == 0:
        return DistanceResult(0, 0, None, "sandwich", undefined=True)
    bch_val, _w = bounds.bch_lower(code.defining)
    lower = bch_val
    lower_tag = "bch"
    if witness is not None:
        bs = bounds.betti_sala_lower(code.defining, witness)
        if bs > lower:
            lower = bs
            lower_tag = "betti_sala"
    upper = n - k + 1
    upper_tag = "singleton"
    for h in upper_hints:
        if h < upper:
            upper = h
            upper_tag = "singleton_like"
    assert lower <= upper, f"bound inversion: {lower} > {upper} ({upper_tag})"
    if lower == upper:
        return DistanceResult(lower, upper, lower, "sandwich")

    costs = _strategy_costs(code, lower, upper)
    order = sorted(costs, key=lambda s: costs[s])
    for strat in order:
        if costs[strat] > budget:
            continue
        try:
            if strat == "exhaustive":
                d, _ = _exhaustive_scan(code, early_stop_at=lower)
                return DistanceResult(lower, upper, d, "exhaustive")
            if strat == "zero_core":
                d, _ = _zero_core_scan(code)
                return DistanceResult(lower, upper, d, "zero_core")
            if strat == "support_rank":
                d, _, _ = _support_rank_climb(code, lower, upper, budget)
                return DistanceResult(lower, upper, d, "low_weight")
        except CombinatorialBudgetExceeded:
            continue
    # partial climb: spend the budget raising the lower bound
    d, new_lower, _ = _support_rank_climb(code, lower, upper, budget, allow_partial=True)
    if d is not None:
        return DistanceResult(lower, upper, d, "low_weight")
    if new_lower == upper:
        return DistanceResult(new_lower, upper, upper, "sandwich")
    return DistanceResult(new_lower, upper, None, lower_tag if new_lower == lower else "low_weight")


def has_weight_at_most(code: CyclicCode, w: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff a nonzero codeword of weight at most w exists.

    Decided by scanning all size-w supports for dependent parity-check
    columns: any lighter word's support extends to such a dependent set.
    """
    n, k = code.n, code.k
    if w < 0 or w > n:
        raise ValueError(f"weight {w} outside 0..{n}")
    if w == 0 or k == 0:
        return False
    if w > n - k:
        return True  # any n-k+1 columns of a rank n-k matrix are dependent
    cost = comb(n, w) * (n - k) * w * min(w, n - k)
    if cost > budget:
        raise CombinatorialBudgetExceeded(
            f"support scan at weight {w} needs ~{cost:.2e} ops, budget {budget:.2e}"
        )
    H = code.parity_check_matrix()
    return _first_dependent_support(code.field, H, w) is not None


def _first_dependent_support(F: FieldSpec, H: np.ndarray, w: int, chunk: int = 4096):
    """Lex-first size-w column support of H with dependent columns, or None."""
    n = H.shape[1]
    it = itertools.combinations(range(n), w)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return None
        combos = np.array(block, dtype=np.int64)
        mats = H[:, combos].transpose(1, 0, 2)
        ranks = linalg.batch_rank(F, mats)
        dep = np.nonzero(ranks < w)[0]
        if len(dep):
            return tuple(int(x) for x in combos[int(dep[0])])


def _support_rank_climb(
    code: CyclicCode, lower: int, upper: int, budget: int, allow_partial: bool = False
):
    """Climb weights from `lower`; returns (exact or None, new_lower, word)."""
    F = code.field
    n, k = code.n, code.k
    H = code.parity_check_matrix()
    spent = 0.0
    w = max(1, lower)
    while w <= upper:
        step_cost = comb(n, w) * (n - k) * w * min(w, n - k)
        if spent + step_cost > budget:
            if allow_partial:
                return None, w, None
            raise CombinatorialBudgetExceeded(
                f"support climb exhausted budget at weight {w}"
            )
        spent += step_cost
        sup = _first_dependent_support(F, H, w)
        if sup is not None:
            ker = linalg.nullspace(F, H[:, list(sup)])
            assert ker.shape[0] >= 1
            vec = ker[0]
            word = np.zeros(n, dtype=np.int64)
            word[list(sup)] = vec
            word = _normalize_word(F, word)
            return w, w, word
        w += 1
    raise AssertionError(
        f"no dependent support up to certified upper bound {upper} ([{n},{k}])"
    )


def _normalize_word(F: FieldSpec, word: np.ndarray) -> np.ndarray:
    nz = np.nonzero(word)[0]
    if len(nz) == 0:
        return word
    lead = int(word[nz[0]])
    if lead != 1:
        word = F.vdiv_nz(word, lead)
    return word


def _exhaustive_scan(code: CyclicCode, early_stop_at: Optional[int] = None, want_words: bool = False,
                     msg_start: int = 1, msg_stop: Optional[int] = None, chunk: int = 1 << 15):
    """Enumerate the message space; returns (min weight, words of that weight).

    `msg_start`/`msg_stop` select a message index range so callers can
    partition the scan; indices are digits base q over the base field.
    """
    F = code.field
    n, k = code.n, code.k
    sub = code.base_elements
    qb = len(sub)
    total = qb**k
    if msg_stop is None:
        msg_stop = total
    G = code.generator_matrix()
    best = n + 1
    best_words: list[np.ndarray] = []
    start = msg_start
    while start < msg_stop:
        stop = min(start + chunk, msg_stop)
        idx = np.arange(start, stop, dtype=np.int64)
        cw = np.zeros((len(idx), n), dtype=np.int64)
        v = idx.copy()
        for row in range(k):
            digit = v % qb
            v //= qb
            syms = sub[digit]
            cw = F.vadd(cw, F.vmul(syms[:, None], G[row][None, :]))
        wts = (cw != 0).sum(axis=1)
        mn = int(wts.min())
        if mn < best:
            best = mn
            best_words = []
        if want_words and mn == best:
            rows = np.nonzero(wts == best)[0]
            for r in rows:
                best_words.append(_normalize_word(F, cw[int(r)].copy()))
        if not want_words and early_stop_at is not None and best <= early_stop_at:
            return best, []
        start = stop
    return best, best_words


def exhaustive_min_weight(code: CyclicCode, msg_start: int = 1, msg_stop: Optional[int] = None) -> int:
    """Partitionable exhaustive scan (message index range), exact min weight."""
    d, _ = _exhaustive_scan(code, msg_start=msg_start, msg_stop=msg_stop)
    return d


def _zero_core_scan(code: CyclicCode, want_words: bool = False, chunk: int = 8192,
                    degenerate_cap: int = 1 << 20):
    """Exact distance of an ambient-field code via zero-set cores.

    Codewords are evaluations over the roots of unity of polynomials on the
    nonzero exponents; every word of weight <= n-k+1 vanishes on >= k-1
    points, and some cyclic shift of it vanishes at 0, so sweeping all
    (k-1)-subsets containing 0 visits every minimum-weight orbit.
    """
    F = code.field
    ctx = code.ctx
    n, k = code.n, code.k
    assert code.base_q == F.q, "zero-core scan requires an ambient-field code"
    nonzero_exps = list(code.defining.complement().exps)
    assert len(nonzero_exps) == k
    if k == 1:
        row = ctx.root_powers(nonzero_exps, range(n))[0]
        word = _normalize_word(F, np.array([row[(-i) % n] for i in range(n)], dtype=np.int64))
        return n, ([word] if want_words else [])
    # evaluation matrix over all points, columns = nonzero exponents
    V = ctx.root_powers(range(n), nonzero_exps)  # (n, k): V[t, j] = alpha^(t * N_j)
    best_zero = k - 2
    best_fs: list[np.ndarray] = []
    degenerates: list[tuple[int, ...]] = []
    it = itertools.combinations(range(1, n), k - 2)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        cores = np.zeros((len(block), k - 1), dtype=np.int64)
        if k >= 3:
            cores[:, 1:] = np.array(block, dtype=np.int64)
        mats = V[cores]  # (B, k-1, k)
        fs = linalg.batch_nullvec(F, mats)
        dead = ~fs.any(axis=1)
        if dead.any():
            degenerates.extend(tuple(int(x) for x in cores[i]) for i in np.nonzero(dead)[0])
            fs = fs[~dead]
        if fs.shape[0] == 0:
            continue
        evals = np.zeros((fs.shape[0], n), dtype=np.int64)
        for j in range(k):
            evals = F.vadd(evals, F.vmul(fs[:, j : j + 1], V[:, j][None, :]))
        zeros = (evals == 0).sum(axis=1)
        mz = int(zeros.max())
        if mz > best_zero:
            best_zero = mz
            best_fs = []
        if want_words and mz == best_zero:
            for r in np.nonzero(zeros == best_zero)[0]:
                best_fs.append(fs[int(r)].copy())
    # degenerate cores: kernel dimension > 1; deduplicate kernels (structured
    # codes repeat them heavily) and sweep each kernel's projective points in
    # one vectorized pass
    seen_kernels: set[bytes] = set()
    spent = 0
    for core in degenerates:
        ker = linalg.nullspace(F, V[list(core)])
        key = ker.tobytes()
        if key in seen_kernels:
            continue
        seen_kernels.add(key)
        t = ker.shape[0]
        count = (F.q**t - 1) // (F.q - 1)
        spent += count
        if spent > degenerate_cap:
            raise CombinatorialBudgetExceeded(
                f"degenerate zero-core kernels need {spent}+ projective points"
            )
        coeffs = _projective_coeff_block(F, t)  # (count, t)
        fs = np.zeros((coeffs.shape[0], k), dtype=np.int64)
        for j in range(t):
            fs = F.vadd(fs, F.vmul(coeffs[:, j : j + 1], ker[j][None, :]))
        evals = np.zeros((fs.shape[0], n), dtype=np.int64)
        for j in range(k):
            evals = F.vadd(evals, F.vmul(fs[:, j : j + 1], V[:, j][None, :]))
        zeros = (evals == 0).sum(axis=1)
        mz = int(zeros.max())
        if mz > best_zero:
            best_zero = mz
            best_fs = []
        if want_words and mz == best_zero:
            for r in np.nonzero(zeros == best_zero)[0]:
                best_fs.append(fs[int(r)].copy())
    d = n - best_zero
    words: list[np.ndarray] = []
    if want_words:
        seen = set()
        for f in best_fs:
            ev = linalg.mat_vec(F, V, f)
            word = np.array([ev[(-i) % n] for i in range(n)], dtype=np.int64)
            word = _normalize_word(F, word)
            key = tuple(int(x) for x in word)
            if key not in seen:
                seen.add(key)
                words.append(word)
    return d, words


def _projective_coeff_block(F: FieldSpec, t: int) -> np.ndarray:
    """Coefficient rows covering the projective space of a t-dim space:
    first nonzero coefficient normalized to 1."""
    blocks = []
    for lead in range(t):
        tail = t - lead - 1
        count = F.q**tail
        rows = np.zeros((count, t), dtype=np.int64)
        rows[:, lead] = 1
        v = np.arange(count, dtype=np.int64)
        for j in range(tail):
            rows[:, lead + 1 + j] = v % F.q
            v //= F.q
        blocks.append(rows)
    return np.concatenate(blocks, axis=0)


def min_weight_word(code: CyclicCode, budget: int = DEFAULT_BUDGET):
    """Exact minimum weight plus a canonical achieving word.

    Returns (d, word, support) with the word scaled to leading coefficient 1
    and the support lexicographically smallest among all minimum-weight
    codewords (including cyclic shifts).  Raises if no exact strategy fits.
    """
    F = code.field
    n, k = code.n, code.k
    if k == 0:
        raise ValueError("zero code has no nonzero codeword")
    bch_val, _ = bounds.bch_lower(code.defining)
    upper = n - k + 1
    costs = _strategy_costs(code, bch_val, upper)
    # the support climb usually stops far below the Singleton ceiling, so
    # rank it by its first step and let the budget cut it off mid-flight
    costs["support_rank"] = float(comb(n, bch_val)) * (n - k) * bch_val * min(bch_val, n - k)
    order = sorted(costs, key=lambda s: costs[s])
    for strat in order:
        if costs[strat] > budget:
            continue
        try:
            if strat == "support_rank":
                d, _, word = _support_rank_climb(code, bch_val, upper, budget)
                sup = tuple(int(x) for x in np.nonzero(word)[0])
                return d, word, sup
            if strat == "exhaustive":
                d, words = _exhaustive_scan(code, want_words=True)
            else:
                d, words = _zero_core_scan(code, want_words=True)
        except CombinatorialBudgetExceeded:
            continue
        best_sup = None
        best_word = None
        for w0 in words:
            sup0 = np.nonzero(w0)[0]
            for s in range(n):
                sup = tuple(sorted((int(x) + s) % n for x in sup0))
                if best_sup is None or sup < best_sup:
                    shifted = np.roll(w0, s)
                    best_sup = sup
                    best_word = _normalize_word(F, shifted)
        return d, best_word, best_sup
    raise CombinatorialBudgetExceeded(
        f"no exact minimum-weight strategy fits budget {budget} for [{n},{k}]"
    )
