"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (also repeated in the
terminal summary).  Timed criteria clear the memo caches first so the
measured time includes all the work.  Run standalone with
``python tests/test_acceptance.py``.
"""

import random
import sys
from fractions import Fraction
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402

from macvogan import cuspidal, oracle, tame  # noqa: E402
from macvogan.exact_groups import GroupHom, dual_group, hom_kernel_image, snf_reduce  # noqa: E402
from macvogan.exceptions import DomainError  # noqa: E402
from macvogan.oracle import MatrixGroupSpec, conj_class_count  # noqa: E402
from macvogan.partitions import enumerate_degree, orbits_and_stabilizers, twist_fn, twist_orbit  # noqa: E402
from macvogan.sl import (  # noqa: E402
    check_compatibility_packet,
    check_finalcomp,
    l_packet,
    mv_class_of,
    mv_fiber,
    sl_canonicalize,
    sl_census,
)
from macvogan.tame import (  # noqa: E402
    component_group_inertial,
    inertial_class,
    iota,
    iota_hat,
    make_example1,
    make_example2,
    random_parameter,
    stab_full,
    twist_parameter,
)
from macvogan.zelevinsky import hp_gl, random_multisegment, twist_multisegment  # noqa: E402

EXAMPLE1 = [(2, 3), (3, 2), (3, 4), (4, 3)]  # (N, q)
EXAMPLE2 = [(5, 2, 2), (7, 3, 3), (5, 4, 2), (5, 4, 4), (13, 4, 4)]  # (q, N, e)
CENSUS = [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)]  # (N, q)
SWEEP_Q = (2, 3, 5, 7)
SWEEP_N = range(1, 6)
SWEEP_SIZE = 200


def clear_caches():
    cuspidal._enumerate.cache_clear()
    oracle.field_arithmetic.cache_clear()
    oracle.conj_class_count.cache_clear()
    tame.stab_full.cache_clear()
    tame.iota_hat.cache_clear()


def report(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def sweep_parameters():
    rng = random.Random(20240)
    return [
        random_parameter(q, n, rng) for q in SWEEP_Q for n in SWEEP_N for _ in range(SWEEP_SIZE)
    ]


def test_criterion_1_example1():
    failures, slowest = [], 0.0
    for N, q in EXAMPLE1:
        clear_caches()
        t0 = time.perf_counter()
        P = make_example1(q, N)
        ih = iota_hat(P)
        fiber = len(mv_fiber(mv_class_of(inertial_class(P))))
        got = (stab_full(P).order, fiber, ih.is_injective(), ih.is_surjective())
        elapsed = time.perf_counter() - t0
        slowest = max(slowest, elapsed)
        if got != (N, 1, True, False) or elapsed >= 1.0:
            failures.append(f"(N={N},q={q}) -> |A|,fiber,inj,surj={got} in {elapsed:.3f}s")
    ok = report(
        1, "surjectivity example", not failures,
        "; ".join(failures) or f"|A|=N, fiber 1, injective and not surjective on 4 tuples; slowest {slowest:.3f}s < 1s",
    )
    assert ok, failures


def test_criterion_2_example2():
    failures, slowest = [], 0.0
    for q, N, e in EXAMPLE2:
        clear_caches()
        t0 = time.perf_counter()
        P = make_example2(q, N, e)
        ih = iota_hat(P)
        got = (
            stab_full(P).order,
            component_group_inertial(P).group.invariant_factors,
            len(mv_fiber(mv_class_of(inertial_class(P)))),
            ih.is_surjective(),
            ih.kernel().order,
        )
        elapsed = time.perf_counter() - t0
        slowest = max(slowest, elapsed)
        if got != (1, (e,), e, True, e) or elapsed >= 1.0:
            failures.append(f"(q={q},N={N},e={e}) -> {got} in {elapsed:.3f}s")
    ok = report(
        2, "injectivity example", not failures,
        "; ".join(failures) or f"|A|=1, inertial group Z/e, fiber e, surjective with kernel e on 5 tuples; slowest {slowest:.3f}s < 1s",
    )
    assert ok, failures


def test_criterion_3_census_vs_oracle():
    clear_caches()
    t0 = time.perf_counter()
    rows, failures = [], []
    for N, q in CENSUS:
        gl, sl = len(enumerate_degree(q, N)), sl_census(q, N)
        gl_o = conj_class_count(MatrixGroupSpec("GL", N, q))
        sl_o = conj_class_count(MatrixGroupSpec("SL", N, q))
        rows.append(f"({N},{q}):{gl}/{sl}")
        if (gl, sl) != (gl_o, sl_o):
            failures.append(f"(N={N},q={q}) census {gl}/{sl} vs oracle {gl_o}/{sl_o}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 300:
        failures.append(f"took {elapsed:.1f}s >= 300s")
    ok = report(
        3, "census vs brute-force oracle", not failures,
        "; ".join(failures) or f"GL/SL counts {' '.join(rows)} all match; {elapsed:.1f}s < 300s",
    )
    assert ok, failures


def test_criterion_4_compatibility_sweep():
    clear_caches()
    params = sweep_parameters()
    t0 = time.perf_counter()
    bad = [P for P in params if not check_compatibility_packet(P)]
    elapsed = time.perf_counter() - t0
    ok = report(
        4, "compatibility sweep", not bad and elapsed < 30,
        f"{len(params) - len(bad)}/{len(params)} parameters "
        f"({SWEEP_SIZE} per (q,N), q in {SWEEP_Q}, N in 1..5); {elapsed:.1f}s (limit 30s)",
    )
    assert ok, bad[:3]


def test_criterion_5_finalcomp():
    clear_caches()
    params = sweep_parameters()
    examples = [make_example1(q, N) for N, q in EXAMPLE1]
    examples += [make_example2(q, N, e) for q, N, e in EXAMPLE2]
    examples += [make_example2(q, N, e, N + 2) for q, N, e in EXAMPLE2]
    bad_random = [P for P in params if not check_finalcomp(sl_canonicalize(P))]
    # example families: also confirm the packet enumerates every member
    bad_examples = []
    for P in examples:
        c = sl_canonicalize(P)
        if not check_finalcomp(c) or len(l_packet(c)) != stab_full(c.canonical).order:
            bad_examples.append(P)
    ok = report(
        5, "finalcomp partition property", not bad_random and not bad_examples,
        f"{len(params) - len(bad_random)}/{len(params)} random parameters, "
        f"{len(examples) - len(bad_examples)}/{len(examples)} example parameters",
    )
    assert ok, (bad_random + bad_examples)[:3]


def test_criterion_6_hp_twist_commutes():
    rng = random.Random(6)
    total = bad = 0
    for q in (3, 5, 7):
        for _ in range(500):
            ms = random_multisegment(q, rng.randint(1, 8), rng)
            b = rng.randrange(q - 1)
            total += 1
            bad += hp_gl(twist_multisegment(ms, b)) != twist_fn(hp_gl(ms), b)
    ok = report(6, "head label commutes with twist", bad == 0, f"{total - bad}/{total} multisegments (500 per q in 3,5,7)")
    assert ok


def _timed(fn):
    t0 = time.perf_counter()
    failures, total = fn()
    return failures, total, time.perf_counter() - t0


def _action_laws():
    rng = random.Random(71)
    bad = total = 0
    for q in (3, 4, 5, 7):
        for M in enumerate_degree(q, 3):
            b1, b2 = rng.randrange(q - 1), rng.randrange(q - 1)
            total += 1
            bad += twist_fn(twist_fn(M, b1), b2) != twist_fn(M, b1 + b2) or twist_fn(M, 0) != M
    for _ in range(300):
        q = rng.choice(SWEEP_Q)
        P = random_parameter(q, rng.randint(1, 5), rng)
        x = (rng.randrange(q - 1), Fraction(rng.randrange(12), 12))
        y = (rng.randrange(q - 1), Fraction(rng.randrange(10), 10))
        total += 1
        bad += twist_parameter(twist_parameter(P, x), y) != twist_parameter(P, (x[0] + y[0], x[1] + y[1]))
    return bad, total


def _orbit_stabilizer():
    bad = total = 0
    for q in (2, 3, 4, 5, 7):
        for N in (1, 2, 3):
            for rep, stab in orbits_and_stabilizers(q, N):
                total += 1
                bad += len(set(twist_orbit(rep))) * stab.order != q - 1
    return bad, total


def _random_group(rng):
    ambient = tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 3)))
    gens = [tuple(rng.randrange(m) for m in ambient) for _ in range(rng.randint(0, 3))]
    return snf_reduce(gens, ambient)


def _duality():
    rng = random.Random(73)
    bad = 0
    for _ in range(300):
        G = _random_group(rng)
        D = dual_group(G)
        bad += dual_group(D).invariant_factors != G.invariant_factors or D.order != G.order
    return bad, 300


def _kernel_image():
    rng = random.Random(74)
    bad = 0
    for _ in range(300):
        S, T = _random_group(rng), _random_group(rng)
        t_elems = list(T.elements())
        images = []
        for d in S.invariant_factors:
            ok = [y for y in t_elems if not any(T.scale(d, y))]
            images.append(rng.choice(ok))
        f = GroupHom(S, T, images)
        ker, im = hom_kernel_image(f)
        fd = f.dual()
        bad += ker.order * im.order != S.order
        bad += fd.kernel().order * fd.image().order != fd.source.order
    return bad, 300


def _iota_well_defined():
    rng = random.Random(75)
    bad = 0
    for _ in range(400):
        q = rng.choice(SWEEP_Q)
        try:
            iota(random_parameter(q, rng.randint(1, 5), rng))
        except DomainError:
            bad += 1
    return bad, 400


def test_criterion_7_substrate():
    clear_caches()
    parts = [
        ("action laws", _action_laws),
        ("orbit-stabilizer", _orbit_stabilizer),
        ("duality involution", _duality),
        ("kernel-image product", _kernel_image),
        ("iota well-defined", _iota_well_defined),
    ]
    details, ok = [], True
    for name, fn in parts:
        bad, total, elapsed = _timed(fn)
        ok &= bad == 0 and elapsed < 10
        details.append(f"{name} {total - bad}/{total} in {elapsed:.2f}s")
    report(7, "group-theory substrate", ok, "; ".join(details) + " (limit 10s each)")
    assert ok, details


if __name__ == "__main__":
    results = []
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
                results.append(True)
            except AssertionError:
                results.append(False)
    sys.exit(0 if all(results) else 1)
