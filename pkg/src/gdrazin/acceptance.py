"""Acceptance criteria, runnable from pytest and from ``gdrazin selftest``.

Each criterion is a function returning ``(ok, detail)``; :func:`run` times it
against its budget.  All comparisons are exact equality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .drazin import drazin, verify_drazin
from .exact import Matrix
from .formulas import (
    Condition,
    cd_eq6,
    check_condition,
    sum_cor21,
    sum_cor22,
    sum_cor23,
    sum_cor24,
    sum_cor25,
    sum_dual,
    sum_thm21,
    sum_thm22,
    sum_thm23,
)
from .generate import GenSpec, gen_drazin_matrix, gen_pair, gen_pair_info, gen_triangular
from .io import load_matrix
from .pierce import corner_drazin, lemma11_triangular_drazin

__all__ = ["Criterion", "CriterionResult", "CRITERIA", "run", "run_all", "fixture_dir"]


@dataclass(frozen=True)
class Criterion:
    key: str
    group: str
    title: str
    budget: float  # seconds
    check: Callable[[Path], tuple[bool, str]]


@dataclass(frozen=True)
class CriterionResult:
    criterion: Criterion
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (
            f"{tag}  {self.criterion.key:<12} {self.seconds:7.2f}s / {self.criterion.budget:>5.0f}s  "
            f"{self.criterion.title}: {self.detail}"
        )


def fixture_dir() -> Path:
    return Path(str(resources.files("gdrazin") / "fixtures"))


def _pair_sizes(i: int) -> tuple[int, int]:
    """Deterministic spread of (n, r) over instance number ``i``."""
    n = 2 + i % 7
    r = (i // 7) % (n + 1)
    return n, r


# -- criteria ---------------------------------------------------------------


def _golden_independent_liu(fixtures: Path):
    a = load_matrix(fixtures / "example21_a.json")
    b = load_matrix(fixtures / "example21_b.json")
    liu = check_condition(a, b, Condition.LIU)
    thm21 = check_condition(a, b, Condition.THM21)
    ba_ok = b @ a == Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    ok = liu and not thm21 and ba_ok
    return ok, f"LIU={liu} THM21={thm21} b*a displayed={ba_ok}"


def _golden_independent_thm21(fixtures: Path):
    a = load_matrix(fixtures / "example22_a.json")
    b = load_matrix(fixtures / "example22_b.json")
    a2 = Matrix([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    cube_zero = (a ** 3).is_zero()
    api = drazin(a).api
    api_is_I = api == Matrix.identity(3)
    thm21 = check_condition(a, b, Condition.THM21)
    liu = check_condition(a, b, Condition.LIU)
    aba = a @ b @ api
    ok = a == b and cube_zero and api_is_I and thm21 and not liu and aba == a2 == a @ a
    return ok, f"a^3=0:{cube_zero} a^pi=I:{api_is_I} THM21={thm21} LIU={liu} a b a^pi=a^2:{aba == a2}"


def _axioms(_):
    count = bad = 0
    for n in range(1, 9):
        for r in range(n + 1):
            for seed in range(5):
                a, _S = gen_drazin_matrix(GenSpec(n, r, seed))
                t = drazin(a)
                ok = (
                    verify_drazin(a, t.ad)
                    and t.api @ t.api == t.api
                    and t.api @ a == a @ t.api
                    # index 0 means a^pi = 0; the 0th power would be I
                    and ((a @ t.api) ** max(t.index, 1)).is_zero()
                )
                count += 1
                bad += not ok
    return bad == 0 and count >= 200, f"{count - bad}/{count} matrices satisfy the axiom suite"


def _lemma11(_):
    count = bad = 0
    for n in range(2, 9):
        for seed in range(100):
            r = seed % (n + 1)
            a_blk, b_blk, c_blk, p = gen_triangular(n, r, seed)
            got = lemma11_triangular_drazin(a_blk, b_blk, c_blk, p)
            count += 1
            bad += got != drazin(a_blk + b_blk + c_blk).ad
    return bad == 0, f"{count - bad}/{count} triangular instances equal the oracle"


def _thm21(_):
    count = bad = trunc_bad = 0
    subfamilies = set()
    for i in range(105):
        n, r = _pair_sizes(i)
        g = gen_pair_info(GenSpec(n, r, 1000 + i, Condition.THM21))
        val, rep = sum_thm21(g.a, g.b)
        val1, _ = sum_thm21(g.a, g.b, extra_terms=1)
        count += 1
        bad += not rep.exact_match
        trunc_bad += val1 != val
        if g.subfamily != "empty":
            subfamilies.add(g.subfamily)
    ok = bad == 0 and trunc_bad == 0 and len(subfamilies) >= 2
    return ok, (
        f"{count - bad}/{count} match, truncation changes={trunc_bad}, "
        f"sub-families={sorted(subfamilies)}"
    )


def _thm22(_):
    count = bad_cd = bad_sum = 0
    for i in range(56):
        n, r = _pair_sizes(i)
        a, b = gen_pair(GenSpec(n, r, 2000 + i, Condition.THM22))
        p = a @ drazin(a).ad
        c = p @ (a + b)
        bad_cd += cd_eq6(a, b) != corner_drazin(c, p).ad
        bad_sum += not sum_thm22(a, b)[1].exact_match
        count += 1
    return bad_cd == 0 and bad_sum == 0, (
        f"closed-form c^D mismatches={bad_cd}, sum mismatches={bad_sum} over {count}"
    )


def _thm23(_):
    count = bad = 0
    for i in range(105):
        n, r = _pair_sizes(i)
        a, b = gen_pair(GenSpec(n, r, 3000 + i, Condition.THM23))
        count += 1
        bad += not sum_thm23(a, b)[1].exact_match
    return bad == 0, f"{count - bad}/{count} match"


def _corollaries(_):
    funcs = {
        Condition.COR21: sum_cor21,
        Condition.COR22: sum_cor22,
        Condition.COR23: sum_cor23,
        Condition.COR24: sum_cor24,
        Condition.COR25: sum_cor25,
    }
    parts, ok = [], True
    for k, (cond, fn) in enumerate(funcs.items()):
        bad = cross_bad = 0
        for i in range(56):
            n, r = _pair_sizes(i)
            if cond is Condition.COR22:
                r = 0
            a, b = gen_pair(GenSpec(n, r, 4000 + 100 * k + i, cond))
            val = fn(a, b)
            bad += val != drazin(a + b).ad
            if cond is Condition.COR22:
                cross_bad += sum_thm23(a, b)[0] != val
            elif cond is Condition.COR21:
                cross_bad += sum_thm21(a, b)[0] != val
        ok = ok and bad == 0 and cross_bad == 0
        parts.append(f"{cond.value}: {56 - bad}/56" + (f" cross={56 - cross_bad}/56" if cond in (Condition.COR21, Condition.COR22) else ""))
    return ok, "; ".join(parts)


def _duality(_):
    parts, ok = [], True
    for cond, primal in ((Condition.COR26, sum_thm21), (Condition.COR27, sum_thm23)):
        bad = dual_bad = 0
        for i in range(56):
            n, r = _pair_sizes(i)
            a, b = gen_pair(GenSpec(n, r, 5000 + i, cond))
            val, rep = sum_dual(a, b, cond)
            bad += not rep.exact_match
            dual_bad += primal(a.T, b.T)[0].T != val
        ok = ok and bad == 0 and dual_bad == 0
        parts.append(f"{cond.value}: oracle {56 - bad}/56, transpose {56 - dual_bad}/56")
    t_bad = 0
    for i in range(100):
        n = 1 + i % 8
        a, _S = gen_drazin_matrix(GenSpec(n, i % (n + 1), 6000 + i))
        t_bad += drazin(a.T).ad != drazin(a).ad.T
    parts.append(f"(A^T)^D=(A^D)^T: {100 - t_bad}/100")
    return ok and t_bad == 0, "; ".join(parts)


CRITERIA: list[Criterion] = [
    Criterion("1-golden-a", "examples", "LIU holds without THM21", 1, _golden_independent_liu),
    Criterion("2-golden-b", "examples", "THM21 holds without LIU", 1, _golden_independent_thm21),
    Criterion("3-axioms", "drazin", "Drazin axiom suite", 60, _axioms),
    Criterion("4-triangular", "pierce", "triangular block inverse vs oracle", 120, _lemma11),
    Criterion("5-thm21", "formulas", "THM21 formula vs oracle", 120, _thm21),
    Criterion("6-thm22", "formulas", "closed-form c^D and THM22 sum", 60, _thm22),
    Criterion("7-thm23", "formulas", "THM23 formula vs oracle", 120, _thm23),
    Criterion("8-corollaries", "formulas", "COR21-COR25 vs oracle", 300, _corollaries),
    Criterion("9-duality", "formulas", "reverse-product duals", 120, _duality),
]


def run(criterion: Criterion, fixtures: Path | None = None) -> CriterionResult:
    fixtures = fixture_dir() if fixtures is None else Path(fixtures)
    start = time.perf_counter()
    ok, detail = criterion.check(fixtures)
    elapsed = time.perf_counter() - start
    if ok and elapsed >= criterion.budget:
        ok, detail = False, f"{detail} (over time budget)"
    return CriterionResult(criterion, ok, detail, elapsed)


def select(filter_: str | None) -> list[Criterion]:
    if not filter_:
        return list(CRITERIA)
    return [c for c in CRITERIA if filter_ in (c.group, c.key) or c.key.startswith(filter_)]


def run_all(filter_: str | None = None, fixtures: Path | None = None) -> list[CriterionResult]:
    return [run(c, fixtures) for c in select(filter_)]
