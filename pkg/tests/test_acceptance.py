"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION n: PASS|FAIL ...`` line; the lines are
also repeated in the terminal summary (see conftest.py).  Runtime budgets are
asserted along with the mathematical claims.
"""

import random
import time

import numpy as np

from zerosum import structure as cl
from zerosum.ratios import check_necessary_conditions
from zerosum.sequences import Sequence, canonical_form, enumerate_canonical
from zerosum.solutions import enumerate_solutions, minimal_basis, solution_dim
from zerosum.verify import (
    SweepSpec,
    run_sweep,
    verify_affine,
    verify_dim_theorems,
    verify_minimal_counts,
    verify_reconstruction,
    verify_sumset_lemmas,
)

RESULTS = []


def report(n, ok, detail):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _failures(r, prefix=""):
    return [f for f in r.failures if f["claim"].startswith(prefix)]


def test_criterion_1_long_sequences():
    t0 = time.perf_counter()
    bad = 0
    for p, l in [(3, 4), (3, 5), (5, 6), (5, 7), (7, 8)]:
        r = verify_dim_theorems(SweepSpec(p, l))
        bad += len(r.failures)
        assert r.tallies["dim_theorems:LongerThanP"] == r.checked
    dt = time.perf_counter() - t0
    report(1, bad == 0 and dt < 5, f"failures={bad} time={dt:.1f}s")


def test_criterion_2_length_p():
    t0 = time.perf_counter()
    notes, ok = [], True
    for p in (3, 5, 7, 11):
        r = verify_dim_theorems(SweepSpec(p, p))
        const = r.tallies["dim_theorems:Constant"]
        exc = r.tallies["dim_theorems:ExceptionalP"]
        full = r.tallies["dim_theorems:FullRank"]
        census = const == 1 and exc == p - 3 and const + exc + full == r.checked
        ok &= census and not r.failures
        notes.append(f"p={p}: failures={len(r.failures)} Constant={const} ExceptionalP={exc} (want {p - 3}) FullRank={full}")
    dt = time.perf_counter() - t0
    ok &= dt < 30
    report(2, ok, "; ".join(notes) + f"; time={dt:.1f}s")


def test_criterion_3_length_p_minus_1():
    t0 = time.perf_counter()
    notes, ok = [], True
    for p in (5, 7, 11):
        zs = verify_dim_theorems(SweepSpec(p, p - 1, "zero_sum"))
        nz = verify_dim_theorems(SweepSpec(p, p - 1, "nonzero_sum"))
        lifted_bad = len(_failures(nz, "completed_dim"))
        ok &= not zs.failures and not nz.failures
        spor = zs.tallies["dim_theorems:ZS_Sporadic7"]
        if p == 7:
            ok &= spor == 1
        bad = ",".join(f["sequence"] for f in zs.failures[:3])
        notes.append(f"p={p}: zero-sum failures={len(zs.failures)} {bad} sporadic={spor} completion failures={lifted_bad}")
    dt = time.perf_counter() - t0
    ok &= dt < 60
    report(3, ok, "; ".join(notes) + f"; time={dt:.1f}s")


def test_criterion_4_minimal_counts():
    t0 = time.perf_counter()
    runs = [(p, p + 1) for p in (3, 5, 7)] + [(p, l) for p in (5, 7, 11) for l in (p, p - 1)]
    bad, extremal = 0, 0
    for p, l in runs:
        r = verify_minimal_counts(SweepSpec(p, l))
        bad += len(r.failures)
        if l == p:
            extremal += r.tallies["minimal_counts:exceptional_t=1"] + r.tallies[f"minimal_counts:exceptional_t={p - 3}"]
    dt = time.perf_counter() - t0
    report(4, bad == 0 and extremal > 0 and dt < 60, f"failures={bad} extremal instances checked={extremal} time={dt:.1f}s")


def test_criterion_5_reconstruction():
    t0 = time.perf_counter()
    ok = True
    A = Sequence(7, [6, 1, 5, 2, 4, 3])
    target = canonical_form(Sequence(7, [1, 6, 3, 4, 2, 5])).representative
    rng = random.Random(5)
    for _ in range(20):
        perm = list(range(6))
        rng.shuffle(perm)
        B = A.permute(perm).scale(rng.randint(1, 6))
        res = cl.reconstruct(B, "equal")
        others = res.others()
        ok &= len(res.classes) == 2 and res.includes_collinear and len(others) == 1
        if len(others) == 1:
            o = others[0]
            ok &= cl.partner_form(B, o) == "iii"
            ok &= canonical_form(Sequence(7, o)).representative == target
    bad = 0
    for p in (3, 5):
        for l in (p, p + 1):
            bad += len(verify_reconstruction(SweepSpec(p, l)).failures)
    dt = time.perf_counter() - t0
    report(5, ok and bad == 0 and dt < 30, f"orbit of the sporadic sequence ok={ok} sweep failures={bad} time={dt:.1f}s")


def test_criterion_6_sumsets():
    t0 = time.perf_counter()
    bad = sum(
        len(verify_sumset_lemmas(SweepSpec(p, l)).failures) for p in (5, 7, 11, 13) for l in range(1, 9)
    )
    dt = time.perf_counter() - t0
    report(6, bad == 0 and dt < 30, f"failures={bad} time={dt:.1f}s")


def test_criterion_7_affine():
    t0 = time.perf_counter()
    bad, targets = 0, 0
    for p in (3, 5, 7):
        for l in (p - 1, p):
            r = verify_affine(SweepSpec(p, l))
            bad += len(r.failures)
            targets += r.tallies["affine:targets"]
    dt = time.perf_counter() - t0
    report(7, bad == 0 and dt < 30, f"failures={bad} (sequence, alpha) targets={targets} time={dt:.1f}s")


def test_criterion_8_properties():
    rng = random.Random(8)
    parts = {}

    ok = True
    for _ in range(1000):
        p = rng.choice([3, 5, 7, 11, 13])
        A = Sequence(p, [rng.randint(1, p - 1) for _ in range(rng.randint(1, 16))])
        alpha = rng.randrange(p)
        ok &= np.array_equal(enumerate_solutions(A, alpha, "direct").members, enumerate_solutions(A, alpha, "mitm").members)
    parts["direct=mitm"] = ok

    ok = True
    for _ in range(300):
        p = rng.choice([5, 7, 11])
        A = Sequence(p, [rng.randint(1, p - 1) for _ in range(rng.randint(1, 10))])
        S = enumerate_solutions(A)
        ms = list(S)
        ok &= 0 in S and not ((S.indicators() @ A.as_array()) % p).any()
        ok &= all(a | b in S for a in ms[:15] for b in ms[:15] if not a & b)
        ok &= all(a ^ b in S for a in ms[:15] for b in ms[:15] if not b & ~a)
    parts["closure"] = ok

    ok = True
    for p, l in [(5, 5), (5, 6), (7, 7)]:
        for A in enumerate_canonical(p, l):
            if solution_dim(A) == l - 1:
                from zerosum.fp import row_rank

                ok &= row_rank(minimal_basis(A), p) == l - 1
    parts["minimal_basis"] = ok

    ok = True
    for _ in range(1000):
        p = rng.choice([3, 5, 7, 11, 13])
        l = rng.randint(1, 12)
        A = Sequence(p, [rng.randint(1, p - 1) for _ in range(l)])
        perm = list(range(l))
        rng.shuffle(perm)
        ok &= canonical_form(A).representative == canonical_form(A.permute(perm).scale(rng.randint(1, p - 1))).representative
    parts["canonical_form"] = ok

    ok, pairs = True, 0
    for p in (3, 5, 7):
        for l in (p - 1, p, p + 1):
            r = verify_reconstruction(SweepSpec(p, l))
            ok &= not _failures(r, "ratio_conditions")
            pairs += sum(v for k, v in r.tallies.items() if k.startswith("reconstruction:ratio_pairs"))
    parts[f"ratio_conditions({pairs} pairs)"] = ok

    spec = SweepSpec(5, 6, checks=("dim_theorems", "minimal_counts", "sumset_lemmas", "affine"))
    whole = run_sweep(spec, workers=1).comparable()
    parts["shards"] = all(
        run_sweep(spec, workers=w).comparable() == whole for w in (2, 3)
    )

    report(8, all(parts.values()), " ".join(f"{k}={'ok' if v else 'BROKEN'}" for k, v in parts.items()))
