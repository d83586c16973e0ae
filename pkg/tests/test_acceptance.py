"""Acceptance suite: one test per published claim, at pinned tolerances.

Each test prints a single pass line so a full run reads as a checklist.
Runs in well under two minutes.
"""

import math
import random

import pytest

from harmfrac import (
    ClassParams,
    EvalPoint,
    HarmonicFunction,
    analytic_weight,
    apply_operator,
    beta,
    check_convolution_closure,
    class_functional,
    class_functional_fd,
    coanalytic_weight,
    coefficient_deficiency,
    convex_combine,
    decompose,
    find_necessity_witness,
    operator_weight,
    random_member,
    random_violator,
    reconstruct,
    specialized_weights,
    verify_sufficiency,
)

PARAM_SETS = [
    ClassParams(beta=0.5),
    ClassParams(beta=0.5, lam=1, k=1),
    ClassParams(beta=0.2, lam=1.3, k=0.4, nu=0.5),
    ClassParams(beta=0.0, lam=0.7, k=0.9, nu=0.25),
]


def _ok(label):
    print(f"PASS {label}")


def test_criterion_1_beta_identity():
    for nu in [i / 10 for i in range(10)]:
        for n in range(2, 41):
            w = operator_weight(n, nu)
            assert abs(w - n * (n - 1) * beta(n - 1, 2 - nu)) / w <= 1e-10
    _ok("1: operator weight equals n(n-1)B(n-1,2-nu) to 1e-10, n in [2,40]")


def test_criterion_2_functional_cross_oracle():
    rng = random.Random(20240817)
    worst = 0.0
    for _ in range(100):
        f = HarmonicFunction(
            a={
                n: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                for n in rng.sample(range(2, 7), rng.randint(0, 3))
            },
            b={
                n: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                for n in rng.sample(range(1, 7), rng.randint(0, 3))
            },
        )
        p = ClassParams(
            beta=rng.uniform(0, 0.9),
            lam=rng.uniform(0, 2),
            k=rng.uniform(0, 1),
            nu=rng.uniform(0, 0.95),
        )
        z = EvalPoint.from_polar(rng.uniform(0.05, 0.9), rng.uniform(0, 2 * math.pi))
        exact = class_functional(f, p, z)
        approx = class_functional_fd(f, p, z, step=1e-4)
        rel = abs(exact - approx) / abs(exact)
        worst = max(worst, rel)
        assert rel <= 1e-6
    _ok(f"2: closed-form vs finite-difference functional, 100 cases, worst rel {worst:.2e}")


def test_criterion_3_sufficiency():
    per_set = 250  # 4 parameter sets x 250 = 1000 seeded cases
    worst = None
    for j, p in enumerate(PARAM_SETS):
        rep = verify_sufficiency(p, cases=per_set, seed=1000 * j)
        assert rep.all_passed, rep.witness
        if worst is None or rep.worst_margin < worst:
            worst = rep.worst_margin
    assert worst > 0
    _ok(f"3: 1000 positive-deficiency functions, grid min Re > beta, worst margin {worst:.4g}")


def test_criterion_4_necessity_witnesses():
    for j, p in enumerate(PARAM_SETS):
        for i in range(50):  # 4 x 50 = 200 seeded violators
            f = random_violator(p, seed=5000 * j + i, margin=0.01)
            assert coefficient_deficiency(f, p) < -0.01
            r0 = find_necessity_witness(f, p)
            assert r0 is not None and 0 < r0 < 1
    _ok("4: radial witness found for all 200 violators")


def test_criterion_5_decomposition_round_trip():
    for j, p in enumerate(PARAM_SETS):
        for i in range(50):  # 4 x 50 = 200 seeded closed-class functions
            f = random_member(p, seed=7000 * j + i)
            w = decompose(f, p)
            total = w.t1 + sum(w.t.values()) + sum(w.s.values())
            assert abs(total - 1) <= 1e-12
            assert w.t1 >= 0 and all(v >= 0 for v in w.t.values())
            assert all(v >= 0 for v in w.s.values())
            g = reconstruct(w, p)
            assert set(g.a_abs) == set(f.a_abs) and set(g.b_abs) == set(f.b_abs)
            for n in f.a_abs:
                assert abs(g.a_abs[n] - f.a_abs[n]) <= 1e-12
            for n in f.b_abs:
                assert abs(g.b_abs[n] - f.b_abs[n]) <= 1e-12
            # reconstruct -> decompose is the identity on weights too
            w2 = decompose(g, p)
            assert abs(w2.t1 - w.t1) <= 1e-12
    _ok("5: decompose/reconstruct identities to 1e-12 on 200 functions")


def test_criterion_6_corollary_specializations():
    cases = [
        ("lambda0", dict(lam=0, k=0.3)),
        ("lambda0", dict(lam=0, k=1)),
        ("lambda1", dict(lam=1, k=0.2)),
        ("lambda1", dict(lam=1, k=0.8)),
        ("k1", dict(lam=0.6, k=1)),
        ("k1", dict(lam=2, k=1)),
        ("k0", dict(lam=0.4, k=0)),
        ("k0", dict(lam=1.7, k=0)),
    ]
    for variant, kw in cases:
        for nu in (0.0, 0.25, 0.5, 0.75):
            p = ClassParams(nu=nu, **kw)
            for n in range(1, 21):
                w = specialized_weights(variant, n, p)
                psi = coanalytic_weight(n, p)
                assert w.psi_signed == pytest.approx(psi, rel=1e-12, abs=1e-12)
                if n >= 2:
                    assert w.phi == pytest.approx(analytic_weight(n, p), rel=1e-12)
    _ok("6: corollary weight formulas match the general ones to 1e-12")


def test_criterion_7_convolution_closure():
    rng = random.Random(777)
    for i in range(500):
        p = ClassParams(
            lam=rng.uniform(0, 2), k=rng.uniform(0, 1), nu=rng.uniform(0, 0.9)
        )
        alpha = rng.uniform(0.1, 0.95)
        level_beta = rng.uniform(0, alpha * 0.99)
        pa = p.with_beta(alpha)
        f1 = random_member(pa, seed=2 * i, cap_magnitudes=0.95)
        f2 = random_member(pa, seed=2 * i + 1, cap_magnitudes=0.95)
        report = check_convolution_closure(f1, f2, alpha, level_beta, p, strict=True)
        assert report.deficiency_alpha > 0
        assert report.deficiency_beta > 0
    _ok("7: convolution of 500 in-class pairs stays in class at level alpha")


def test_criterion_8_convex_combination_closure():
    rng = random.Random(888)
    for i in range(500):
        p = ClassParams(
            beta=rng.uniform(0, 0.9),
            lam=rng.uniform(0, 2),
            k=rng.uniform(0, 1),
            nu=rng.uniform(0, 0.9),
        )
        m = rng.randint(1, 5)
        fs = [random_member(p, seed=10 * i + j) for j in range(m)]
        raw = [rng.random() + 1e-9 for _ in range(m)]
        total = sum(raw)
        combo = convex_combine(fs, [t / total for t in raw])
        assert coefficient_deficiency(combo, p) > 0
    _ok("8: 500 convex combinations keep positive deficiency")


def test_criterion_9_operator_sanity():
    f = HarmonicFunction(a={2: 0.5 + 0.25j, 9: -0.3}, b={1: 0.3, 4: 0.1j})
    g = apply_operator(f, 0.0)
    assert g.a == f.a and g.b == f.b
    for nu in [i / 10 for i in range(10)]:
        assert abs(operator_weight(1, nu) - 1) <= 1e-13
    _ok("9: order-0 operator is the identity; index-1 weight is 1")


def test_criterion_10_hand_values():
    assert analytic_weight(2, ClassParams(lam=1, k=1)) == pytest.approx(4.0, abs=1e-12)
    assert coanalytic_weight(2, ClassParams(lam=1, k=0)) == pytest.approx(-2.0, abs=1e-12)
    assert operator_weight(2, 0.5) == pytest.approx(4 / 3, abs=1e-12)
    assert operator_weight(3, 0.5) == pytest.approx(1.6, abs=1e-12)
    _ok("10: hand-value spot checks (4, -2, 4/3, 1.6)")
