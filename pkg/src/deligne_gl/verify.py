"""Named verification suites behind ``deligne-gl verify``.

Each suite runs a family of exact identity checks and reports per-case
results.  Suites call library entry points through their modules, so a test
can fork a single rule (say, the determinant's sign rule) and watch the
suite fail.  DELIGNE_THREADS caps a worker pool over the per-case thunks;
results are merged in submission order, so output is deterministic either
way.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bisym, genfun, grothendieck, oracle, partitions as pt, specialize, symfunc

THREADS_ENV = "DELIGNE_THREADS"


@dataclass
class CaseResult:
    label: str
    ok: bool
    seconds: float
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    params: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def seconds(self) -> float:
        return sum(c.seconds for c in self.cases)

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]


def _max_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _run(labelled_thunks) -> list[CaseResult]:
    def timed(pair):
        label, thunk = pair
        t0 = time.perf_counter()
        ok, detail = thunk()
        return CaseResult(label, ok, time.perf_counter() - t0, detail)

    items = list(labelled_thunks)
    workers = _max_workers()
    if workers == 1:
        return [timed(p) for p in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(timed, items))


def _pair_label(l, m) -> str:
    return f"({pt.format_partition(l)})x({pt.format_partition(m)})"


def suite_detsum(max_size: int = 5) -> SuiteResult:
    """Mixed determinant against the alternating skew-Schur sum."""
    ps = pt.partitions_up_to(max_size)

    def check(l, m):
        def thunk():
            a = grothendieck.s_class(l, m)
            b = grothendieck.mixed_jacobi_trudi(l, m)
            if a == b:
                return True, ""
            return False, f"first mismatch in {_pair_label(l, m)}"

        return thunk

    cases = [(_pair_label(l, m), check(l, m)) for l in ps for m in ps]
    return _run_suite("detsum", f"max_size={max_size}", cases)


def suite_omega(max_size: int = 5) -> SuiteResult:
    """omega in x and y simultaneously conjugates both labels."""
    ps = pt.partitions_up_to(max_size)

    def check(l, m):
        def thunk():
            a = bisym.omega_xy(grothendieck.s_class(l, m))
            b = grothendieck.s_class(pt.conjugate(l), pt.conjugate(m))
            return a == b, ""

        return thunk

    cases = [(_pair_label(l, m), check(l, m)) for l in ps for m in ps]
    return _run_suite("omega", f"max_size={max_size}", cases)


def suite_genfun(degree: int = 6, a: int = 2, b: int = 2, nx: int = 3, ny: int = 3) -> SuiteResult:
    """Master generating-function identity at one truncation."""
    spec = genfun.TruncationSpec(a=a, b=b, nx=nx, ny=ny, degree=degree)
    npairs = len(genfun.genfun_pairs(spec))

    def thunk():
        ok, diff = genfun.verify_genfun(spec)
        detail = f"pairs={npairs}" + ("" if ok else f"; first differing monomial {diff}")
        return ok, detail

    return _run_suite("genfun", f"spec={spec}", [(f"degree<={degree}", thunk)])


def suite_cauchy(max_tau: int = 3, a: int = 2, nx: int = 2, degree: int = 5) -> SuiteResult:
    """Skew Cauchy identities per tau, plus the alternating dual identity."""
    spec = genfun.TruncationSpec(a=a, b=a, nx=nx, ny=nx, degree=degree)
    cases = []
    for tau in pt.partitions_up_to(max_tau):
        def thunk(t=tau):
            return genfun.verify_cauchy(t, spec), ""

        cases.append((f"tau=({pt.format_partition(tau)})", thunk))
    dual_spec = genfun.TruncationSpec(a=2, b=2, nx=1, ny=1, degree=4)

    def dual_thunk():
        return genfun.verify_dual_cauchy(dual_spec), ""

    cases.append(("dual", dual_thunk))
    return _run_suite("cauchy", f"max_tau={max_tau} spec={spec}", cases)


def suite_detshift(max_n: int = 5) -> SuiteResult:
    """Exterior powers of the dual against determinant twists, all ranks."""
    cases = []
    for n in range(max_n + 1):
        for i in range(n + 1):
            def thunk(i=i, n=n):
                return specialize.check_detshift(i, n), ""

            cases.append((f"i={i},n={n}", thunk))
    return _run_suite("detshift", f"max_n={max_n}", cases)


def suite_f_n(max_size: int = 4, max_n: int = 4) -> SuiteResult:
    """Specialized classes against rational GL_n characters."""
    ps = pt.partitions_up_to(max_size)
    cases = []
    for l in ps:
        for m in ps:
            for n in range(len(l) + len(m), max_n + 1):
                def thunk(l=l, m=m, n=n):
                    got = specialize.specialize_to_gl_n(grothendieck.s_class(l, m), n)
                    want = specialize.rational_schur_char(specialize.signature_of(l, m, n))
                    return got == want, ""

                cases.append((f"{_pair_label(l, m)},n={n}", thunk))
    return _run_suite("f_n", f"max_size={max_size} max_n={max_n}", cases)


def _run_suite(name: str, params: str, cases) -> SuiteResult:
    return SuiteResult(name, params, _run(cases))


SUITES = {
    "detsum": suite_detsum,
    "omega": suite_omega,
    "genfun": suite_genfun,
    "cauchy": suite_cauchy,
    "detshift": suite_detshift,
    "f_n": suite_f_n,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)


def format_report(result: SuiteResult) -> str:
    lines = [f"suite {result.suite} [{result.params}]"]
    for c in result.failures()[:10]:
        lines.append(f"  FAIL {c.label}" + (f": {c.detail}" if c.detail else ""))
    if result.suite == "genfun" and result.cases:
        lines.append(f"  {result.cases[0].detail}")
    status = "PASS" if result.passed else "FAIL"
    lines.append(f"{status} ({len(result.cases)} cases, {result.seconds:.2f}s)")
    return "\n".join(lines)
