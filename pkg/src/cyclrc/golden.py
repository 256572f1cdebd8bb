"""Golden corpus: recorded example codes rebuilt and re-certified bit-exactly.

Each entry pins the inputs and the certified outputs of one worked example.
The runner reconstructs everything from the inputs alone and compares: set
algebra and generator coefficients exactly, distances through whichever
independent oracle fits the budget (enumeration, support scan, zero-core) or
through a closed bound sandwich, and locality through the definition-level
verifier.  Any oracle/expectation mismatch is a failure, never a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import comb
from typing import Optional

from . import bounds
from .constructions import ConstructionRequest, build
from .cyclic import (
    CombinatorialBudgetExceeded,
    DEFAULT_BUDGET,
    code_from_defining_set,
    cyc_context,
    exhaustive_min_weight,
    has_weight_at_most,
    min_distance,
    product_set,
)
from .locality import locality_from_product, verify_certificate_groups, verify_locality_exhaustive


@dataclass
class CheckResult:
    entry: str
    check: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status}  {self.entry}: {self.check}"
        if self.detail:
            msg += f" ({self.detail})"
        return msg


def load_corpus(path=None) -> dict:
    if path is None:
        path = resources.files("cyclrc").joinpath("golden/corpus.json")
        label = "golden/corpus.json"
        text = path.read_text()
    else:
        label = str(path)
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{label}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict) or data.get("schema") != 1 or "entries" not in data:
        raise ValueError(f"{label}: unrecognized layout")
    seen = set()
    for e in data["entries"]:
        for key in ("name", "kind", "expect"):
            if key not in e:
                raise ValueError(f"{label}: entry missing {key!r}: {e}")
        if e["name"] in seen:
            raise ValueError(f"{label}: duplicate entry {e['name']}")
        seen.add(e["name"])
    return data


def crosscheck_distance(code, d: int, budget: int) -> Optional[str]:
    """Re-derive an exact distance through an enumeration oracle if one fits.

    Returns the oracle name used, or None when every oracle exceeds the
    budget (the bound sandwich then stands on its own).  Raises AssertionError
    on disagreement.
    """
    n, k = code.n, code.k
    qb = code.base_q
    if qb**k * n <= min(budget, 10**8):
        got = exhaustive_min_weight(code)
        assert got == d, f"exhaustive oracle found {got}, expected {d}"
        return "exhaustive"
    try:
        if d > 1 and has_weight_at_most(code, d - 1, budget):
            raise AssertionError(f"support scan found weight below {d}")
        if d <= n - k and not has_weight_at_most(code, d, budget):
            raise AssertionError(f"support scan found no weight-{d} word")
        return "support_scan"
    except CombinatorialBudgetExceeded:
        return None


def _check_family(entry: dict, budget: int) -> list[CheckResult]:
    name = entry["name"]
    exp = entry["expect"]
    out: list[CheckResult] = []

    def add(check: str, ok: bool, detail: str = ""):
        out.append(CheckResult(name, check, ok, detail))

    req = ConstructionRequest.from_dict(entry["request"])
    res = build(req, budget)
    o, cert, code = res.optimality, res.locality, res.code

    add("length", o.n == exp["n"], f"{o.n} vs {exp['n']}")
    add("dimension", o.k == exp["k"], f"{o.k} vs {exp['k']}")
    add("locality r", o.r == exp["r"], f"{o.r} vs {exp['r']}")
    add("locality delta", o.delta == exp["delta"], f"{o.delta} vs {exp['delta']}")
    add("optimal flag", o.optimal == exp["optimal"], f"{o.optimal} vs {exp['optimal']}")
    add("divisibility flag", o.divides == exp["divides"], f"{o.divides} vs {exp['divides']}")
    if "anchor_dual" in exp:
        add("anchor dual distance", cert.dual_distance == exp["anchor_dual"],
            f"{cert.dual_distance} vs {exp['anchor_dual']}")
        want_exact = exp.get("anchor_dual_exact", True)
        add("anchor dual exactness", cert.dual_exact == want_exact,
            f"exact={cert.dual_exact}")

    if exp.get("d_exact_known", True):
        ok = o.d_exact == exp["d"]
        add("distance", ok, f"exact {o.d_exact} vs {exp['d']}")
        if ok:
            method = crosscheck_distance(code, o.d_exact, budget)
            add("distance cross-check", True, method or "bound sandwich stands alone")
    else:
        add("distance lower bound", o.d_lower == exp["d"], f"{o.d_lower} vs {exp['d']}")
        add("distance upper bound", o.d_upper == exp["d_upper"], f"{o.d_upper} vs {exp['d_upper']}")
        add("distance left open", o.d_exact is None, f"exact={o.d_exact}")

    sound = verify_certificate_groups(code, cert, budget)
    add("repair groups sound", sound)
    verified = verify_locality_exhaustive(code, o.r, o.delta, budget, hint_groups=cert.groups)
    add("locality verified", verified)
    return out


def _check_product(entry: dict, budget: int) -> list[CheckResult]:
    name = entry["name"]
    exp = entry["expect"]
    out: list[CheckResult] = []

    def add(check: str, ok: bool, detail: str = ""):
        out.append(CheckResult(name, check, ok, detail))

    ctx = cyc_context(entry["q"], entry["n"])
    anchor = ctx.exponent_set(entry["anchor"])
    run = ctx.exponent_set(entry["run"])
    ab = product_set(anchor, run)
    add("product set", list(ab.exps) == exp["ab"], f"{list(ab.exps)}")
    code = code_from_defining_set(ctx, ab)
    add("dimension", code.k == exp["k"], f"{code.k} vs {exp['k']}")
    if "generator" in exp:
        add("generator coefficients", list(code.gen.coeffs) == exp["generator"],
            code.gen.pretty())
    cert = locality_from_product(anchor, run, code, budget)
    add("anchor dual distance", cert.dual_distance == exp["anchor_dual"],
        f"{cert.dual_distance} vs {exp['anchor_dual']}")
    add("run distance", cert.run_distance == exp["run_distance"],
        f"{cert.run_distance} vs {exp['run_distance']}")
    add("locality r", cert.r == exp["r"], f"{cert.r} vs {exp['r']}")
    add("locality delta", cert.delta == exp["delta"], f"{cert.delta} vs {exp['delta']}")
    if "code_distance" in exp:
        res = min_distance(code, budget)
        add("code distance", res.exact == exp["code_distance"],
            f"{res.exact} vs {exp['code_distance']} [{res.method}]")
    add("repair groups sound", verify_certificate_groups(code, cert, budget))
    add("locality verified",
        verify_locality_exhaustive(code, cert.r, cert.delta, budget, hint_groups=cert.groups))
    return out


def _check_dual_pair(entry: dict, budget: int) -> list[CheckResult]:
    name = entry["name"]
    exp = entry["expect"]
    out: list[CheckResult] = []

    def add(check: str, ok: bool, detail: str = ""):
        out.append(CheckResult(name, check, ok, detail))

    ctx = cyc_context(entry["q"], entry["n"])
    S = ctx.exponent_set(entry["defining"])
    code = code_from_defining_set(ctx, S)
    d_dual = min_distance(code.dual_code(), budget)
    d_comp = min_distance(code.complement_code(), budget)
    add("dual vs complement", d_dual.exact == d_comp.exact,
        f"{d_dual.exact} vs {d_comp.exact}")
    add("recorded value", d_dual.exact == exp["value"],
        f"{d_dual.exact} vs {exp['value']}")
    for label, c in (("dual", code.dual_code()), ("complement", code.complement_code())):
        method = crosscheck_distance(c, exp["value"], budget)
        add(f"{label} distance cross-check", True, method or "bound sandwich stands alone")
    return out


_CHECKERS = {
    "family": _check_family,
    "product": _check_product,
    "dual_pair": _check_dual_pair,
}


def run_entry(entry: dict, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    kind = entry["kind"]
    if kind not in _CHECKERS:
        return [CheckResult(entry.get("name", "?"), "known kind", False, f"unknown kind {kind!r}")]
    try:
        return _CHECKERS[kind](entry, budget)
    except Exception as exc:  # a crash is a failed entry, not a crashed run
        return [CheckResult(entry["name"], "rebuild", False, f"{type(exc).__name__}: {exc}")]


def run_corpus(budget: int = DEFAULT_BUDGET, names=None, path=None) -> list[CheckResult]:
    try:
        data = load_corpus(path)
    except ValueError as exc:
        return [CheckResult("corpus", "well-formed golden data", False, str(exc))]
    results: list[CheckResult] = []
    for entry in data["entries"]:
        if names is not None and entry["name"] not in names:
            continue
        results.extend(run_entry(entry, budget))
    return results
