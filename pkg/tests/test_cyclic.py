import itertools

import numpy as np
import pytest

from cyclrc import linalg
from cyclrc.cyclic import (
    CombinatorialBudgetExceeded,
    EmptySupport,
    NotQClosed,
    all_cyclotomic_cosets,
    code_from_defining_set,
    cyc_context,
    cyclotomic_coset,
    exhaustive_min_weight,
    has_weight_at_most,
    is_q_closed,
    min_distance,
    min_weight_word,
    product_set,
)


def test_context_alpha_order():
    for q, n in [(2, 31), (19, 18), (23, 24), (32, 33)]:
        ctx = cyc_context(q, n)
        F = ctx.field
        assert F.pow(ctx.alpha, n) == 1
        for j in range(1, n):
            assert F.pow(ctx.alpha, j) != 1
        assert (F.q - 1) % n == 0


def test_cyclotomic_cosets():
    ctx = cyc_context(2, 7)
    assert cyclotomic_coset(0, ctx).exps == (0,)
    assert cyclotomic_coset(1, ctx).exps == (1, 2, 4)
    assert cyclotomic_coset(3, ctx).exps == (3, 5, 6)
    # n | q+1: cosets are {s, -s}
    ctx24 = cyc_context(23, 24)
    for s in range(1, 12):
        assert set(cyclotomic_coset(s, ctx24).exps) == {s, 24 - s}
    assert cyclotomic_coset(12, ctx24).exps == (12,)


def test_coset_closure_randomized():
    # orbit property over 1000 random (q, n, s) draws
    rng = np.random.default_rng(11)
    pairs = [(2, 7), (2, 15), (3, 8), (3, 13), (4, 15), (5, 8), (19, 18), (23, 24)]
    for _ in range(1000):
        q, n = pairs[int(rng.integers(0, len(pairs)))]
        ctx = cyc_context(q, n)
        s = int(rng.integers(0, n))
        c = cyclotomic_coset(s, ctx)
        assert s in c
        assert is_q_closed(c)
        assert {(e * q) % n for e in c.exps} == set(c.exps)


def test_is_q_closed_examples():
    ctx = cyc_context(2, 31)
    assert is_q_closed(ctx.exponent_set([]))
    assert is_q_closed(ctx.exponent_set(range(31)))
    assert is_q_closed(ctx.exponent_set([0, 1, 2, 4, 8, 16]))
    ctx7 = cyc_context(2, 7)
    assert not is_q_closed(ctx7.exponent_set([1]))


def test_product_set_examples():
    ctx = cyc_context(2, 31)
    A = ctx.exponent_set([0, 1, 2, 4, 8, 16])
    B = ctx.exponent_set([5, 9, 10, 18, 20])
    assert product_set(A, ctx.exponent_set([0])).exps == A.exps
    ab = product_set(A, B)
    assert ab.exps == (3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 17, 18, 19, 20, 21, 22, 24, 25, 26, 28)
    # singleton times a window is a shifted window
    t = ctx.exponent_set([4])
    win = ctx.exponent_set(range(0, 3))
    assert product_set(t, win).exps == (4, 5, 6)


def test_code_construction_and_errors():
    ctx = cyc_context(8, 7)
    full = code_from_defining_set(ctx, ctx.exponent_set([]))
    assert full.k == 7 and full.gen.degree == 0
    code = code_from_defining_set(ctx, ctx.exponent_set([3, 4, 5]))
    assert code.k == 4
    ctx7 = cyc_context(2, 7)
    with pytest.raises(NotQClosed):
        code_from_defining_set(ctx7, ctx7.exponent_set([1]))
    code_from_defining_set(ctx7, ctx7.exponent_set([1]), base="extension")  # fine


def test_codeword_roots_and_shift_closure_randomized():
    # encoded words vanish on the defining set; shifts stay in the code
    rng = np.random.default_rng(23)
    cases = [(2, 15, [1, 2, 4, 8, 5, 10]), (19, 18, [1, 2, 3, 4, 5, 9]), (8, 7, [3, 4, 5])]
    count = 0
    while count < 1000:
        q, n, exps = cases[count % len(cases)]
        ctx = cyc_context(q, n)
        code = code_from_defining_set(ctx, ctx.exponent_set(exps))
        sub = code.base_elements
        msg = sub[rng.integers(0, len(sub), code.k)]
        cw = code.encode(msg)
        for j in code.defining.exps:
            acc = 0
            for i in range(n):
                acc = ctx.field.add(acc, ctx.field.mul(int(cw[i]), ctx.root(j * i)))
            assert acc == 0
            break  # one root per draw keeps the loop cheap
        shifted = np.roll(cw, int(rng.integers(1, n)))
        M = code.roots_parity_matrix()
        assert not linalg.mat_vec(ctx.field, M, shifted).any()
        count += 1


def test_dual_code_structure():
    ctx = cyc_context(8, 7)
    code = code_from_defining_set(ctx, ctx.exponent_set([3, 4, 5]))
    dual = code.dual_code()
    assert dual.k == 3
    assert dual.dual_code().defining.exps == code.defining.exps
    prod = linalg.mat_mul(ctx.field, code.generator_matrix(), dual.generator_matrix().T)
    assert not prod.any()
    # dual of the full space is the zero code
    full = code_from_defining_set(ctx, ctx.exponent_set([]))
    assert full.dual_code().k == 0


def test_complement_code():
    ctx = cyc_context(8, 7)
    code = code_from_defining_set(ctx, ctx.exponent_set([3, 4, 5]))
    comp = code.complement_code()
    assert comp.defining.exps == (0, 1, 2, 6)
    assert len(code.defining) + len(comp.defining) == 7
    zero = code_from_defining_set(ctx, ctx.exponent_set([]))
    assert zero.complement_code().k == 0


def test_puncture():
    ctx = cyc_context(19, 18)
    code = code_from_defining_set(ctx, ctx.exponent_set([1, 2, 3, 4, 5, 9]))
    R = code.puncture(range(18))
    assert R.shape[0] == code.k
    single = code.puncture([4])
    assert single.shape[0] <= 1
    with pytest.raises(EmptySupport):
        code.puncture([])


def test_zero_code_distance_undefined():
    ctx = cyc_context(8, 7)
    zero = code_from_defining_set(ctx, ctx.exponent_set(range(7)))
    res = min_distance(zero)
    assert res.undefined and res.exact is None


def test_full_space_distance_one():
    ctx = cyc_context(8, 7)
    full = code_from_defining_set(ctx, ctx.exponent_set([]))
    assert min_distance(full).exact == 1


def test_min_distance_example_values():
    # dual parameters of the n=18 anchor: [18, 6, 10]
    ctx = cyc_context(19, 18)
    A = ctx.exponent_set([1, 2, 3, 4, 5, 9])
    dual = code_from_defining_set(ctx, A).dual_code()
    assert dual.k == 6
    res = min_distance(dual)
    assert res.exact == 10
    # the same value through the independent support scan
    assert not has_weight_at_most(dual, 9)
    assert has_weight_at_most(dual, 10)


def test_exhaustive_partitioned_iteration():
    ctx = cyc_context(19, 18)
    dual = code_from_defining_set(ctx, ctx.exponent_set([0, 1, 5, 9])).dual_code()
    total = 19**dual.k
    cut = total // 3
    d1 = exhaustive_min_weight(dual, 1, cut)
    d2 = exhaustive_min_weight(dual, cut, total)
    assert min(d1, d2) == 9


def test_has_weight_at_most_examples():
    ctx = cyc_context(2, 31)
    B = ctx.exponent_set([5, 9, 10, 18, 20])
    code = code_from_defining_set(ctx, B)
    assert not has_weight_at_most(code, 0)
    assert not has_weight_at_most(code, 2)
    assert has_weight_at_most(code, 3)
    # weights beyond the parity rank are always reachable, no scan needed
    assert has_weight_at_most(code, 14, budget=10**6)
    # a mid-range weight on a high-codimension code does blow the budget
    wide = code_from_defining_set(ctx, product_set(ctx.exponent_set([0, 1, 2, 4, 8, 16]), B))
    with pytest.raises(CombinatorialBudgetExceeded):
        has_weight_at_most(wide, 14, budget=10**6)


def test_support_scan_agrees_with_enumeration_binary_sweep():
    # all binary cyclic codes with n in {7, 9, 15}: the support-scan decision
    # matches the exhaustively computed distance at every weight
    for n in (7, 9, 15):
        ctx = cyc_context(2, n)
        cosets = all_cyclotomic_cosets(ctx)
        for mask in range(1, 1 << len(cosets)):
            exps = []
            for i, c in enumerate(cosets):
                if mask >> i & 1:
                    exps.extend(c.exps)
            S = ctx.exponent_set(exps)
            if len(S) == n:
                continue
            code = code_from_defining_set(ctx, S)
            d = exhaustive_min_weight(code)
            for w in range(1, min(n, d + 2)):
                assert has_weight_at_most(code, w) == (w >= d), (n, exps, w, d)


def test_min_weight_word_properties():
    ctx = cyc_context(2, 31)
    A = ctx.exponent_set([0, 1, 2, 4, 8, 16])
    dual = code_from_defining_set(ctx, A, base="extension").dual_code()
    d, word, sup = min_weight_word(dual)
    assert d == 15 and len(sup) == 15
    assert int(word[sup[0]]) == 1  # leading normalization
    # membership: orthogonal to the primal generator matrix
    G = code_from_defining_set(ctx, A, base="extension").generator_matrix()
    assert not linalg.mat_vec(ctx.field, G, np.asarray(word)).any()


def test_strategy_cross_agreement_ambient():
    # zero-core equals message enumeration on ambient codes where both fit
    import cyclrc.cyclic as cy

    ctx = cyc_context(19, 18)
    rng = np.random.default_rng(9)
    for _ in range(25):
        exps = sorted({int(x) for x in rng.integers(0, 18, rng.integers(1, 14))})
        code = code_from_defining_set(ctx, ctx.exponent_set(exps), base="extension")
        if code.k < 2 or 19**code.k > 10**7:
            continue
        d_zc, _ = cy._zero_core_scan(code)
        d_ex = exhaustive_min_weight(code)
        assert d_zc == d_ex, exps


def test_serialization_shape():
    ctx = cyc_context(2, 31)
    code = code_from_defining_set(ctx, ctx.exponent_set([0, 1, 2, 4, 8, 16]))
    d = code.to_dict()
    assert d["q"] == 2 and d["n"] == 31 and d["k"] == code.k
    assert d["defining_exponents"] == list(code.defining.exps)
    assert d["generator_coeffs"] == list(code.gen.coeffs)
