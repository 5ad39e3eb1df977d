"""Acceptance criteria: exact randomized checks at the contracted volumes.

Each test is one criterion; pytest -v therefore emits one pass/fail line
per criterion.  All checks are zero tolerance: every comparison is exact
field arithmetic, and any failed trial fails the criterion.
"""

import time

from arquiver.exactmat import FieldSpec, mat_rank
from arquiver.quiverpath import Quiver
from arquiver.repcat import (
    PROJECTIVE,
    SIMPLE,
    arrows_model_map,
    ext1_space,
    indecomposable,
    proj_to_inj,
    std_resolutions,
)
from arquiver.artranslate import tau_inverse_rep, tau_rep
from arquiver.arpairing import (
    double_presentation_nullity,
    pairing_gram,
    pairing_prime,
    pairing_prime_fast,
    sign_calibration,
)
from arquiver.harness import (
    GenConfig,
    gen_class,
    gen_morphism,
    gen_quiver,
    gen_rep,
    gen_rep_without_injective,
    _gen_pair_with_ext,
    run_suite,
)

FP = FieldSpec.prime(10007)
QQ = FieldSpec.rational()


def _suite_green(name, trials, field):
    rep = run_suite(name, GenConfig(field=field, trials=trials))
    assert rep.failed == 0, rep.counterexample
    assert rep.passed + rep.skipped == trials
    return rep


def test_ac01_ar_dimensions_500_per_field_under_60s_each():
    for field, tag in ((FP, "fp:10007"), (QQ, "q")):
        start = time.perf_counter()
        rep = _suite_green("ar-dim", 500, field)
        elapsed = time.perf_counter() - start
        assert rep.skipped == 0
        assert elapsed < 60.0, f"{tag}: {elapsed:.1f}s"
        print(f"AC1 {tag}: 500 dimension triples agree ({elapsed:.1f}s)")
    print("AC1 PASS")


def test_ac02_gram_rank_equals_ext_dim_on_same_instances():
    for field in (FP, QQ):
        cfg = GenConfig(field=field, trials=500)
        for trial in (0, 1, 2):
            assert gen_quiver(cfg, trial) == gen_quiver(cfg, trial)
            assert gen_rep(cfg, trial, "x", gen_quiver(cfg, trial)) == \
                gen_rep(cfg, trial, "x", gen_quiver(cfg, trial))
        rep = _suite_green("perfect", 500, field)
        assert rep.skipped == 0
    print("AC2 PASS: Gram rank = dim Ext^1 on the AC1 instance streams")


def test_ac03_bifunctoriality_200():
    rep = _suite_green("bifunctorial", 200, FP)
    assert rep.skipped == 0
    print("AC3 PASS: 200 composition-compatibility instances")


def test_ac04_evaluation_lemmas_200_each():
    rep = _suite_green("ev-lemma", 200, FP)
    assert rep.skipped == 0
    print("AC4 PASS: 200 symmetry and 200 trace-normalization instances")


def test_ac05_translate_identity_500_with_recorded_calibration():
    cal = sign_calibration()
    assert cal.epsilon in (1, -1)
    assert cal.instance["quiver"]["vertices"] == 3
    rep = _suite_green("signs", 500, FP)
    assert rep.skipped <= 50, f"skip rate too high: {rep.skipped}/500"
    print(f"AC5 PASS: translate identity on {rep.passed} admissible "
          f"instances (epsilon={cal.epsilon:+d}, {rep.skipped} skipped)")


def test_ac06_route_agreement_200():
    rep = _suite_green("routes", 200, FP)
    assert rep.skipped <= 20
    print(f"AC6 PASS: both translate routes agree on {rep.passed} instances")


def test_ac07_fast_pairing_matches_reference_500():
    cfg = GenConfig(trials=500)
    eps_before = sign_calibration().epsilon
    checked = skipped = 0
    for trial in range(500):
        quiver = gen_quiver(cfg, trial)
        x = gen_rep_without_injective(cfg, trial, "x", quiver)
        if x is None:
            skipped += 1
            continue
        y = _gen_pair_with_ext(cfg, trial, x, quiver)
        z = gen_class(cfg, trial, "z", x, y)
        f = gen_morphism(cfg, trial, "f", tau_inverse_rep(y), x)
        assert pairing_prime_fast(z, f) == pairing_prime(z, f), trial
        checked += 1
    assert sign_calibration().epsilon == eps_before
    assert checked >= 400
    print(f"AC7 PASS: fast route = reference route on {checked} instances "
          f"with fixed epsilon={eps_before:+d}")


def test_ac08_main_theorem_500_fp_plus_100_q_under_120s():
    start = time.perf_counter()
    rep_fp = _suite_green("theorem", 500, FP)
    rep_q = _suite_green("theorem", 100, QQ)
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"{elapsed:.1f}s"
    print(f"AC8 PASS: invariance on {rep_fp.passed}/500 fp and "
          f"{rep_q.passed}/100 q instances; skip rates "
          f"{rep_fp.skipped / 5:.1f}% fp, {rep_q.skipped:.0f}% q "
          f"({elapsed:.1f}s)")


def test_ac09_structural_sanities():
    rep = _suite_green("kills", 50, FP)
    assert rep.skipped == 0

    rep = _suite_green("euler", 500, FP)
    assert rep.skipped == 0

    cfg = GenConfig()
    for trial in range(100):
        quiver = gen_quiver(cfg, trial)
        x = gen_rep(cfg, trial, "resx", quiver)
        rx = std_resolutions(x)
        assert (rx.mult @ rx.incl).is_zero()
        assert (rx.diff_map @ rx.unit_map).is_zero()
        for v in range(quiver.vertex_count):
            d_omega = rx.proj_omega.rep.dims[v]
            d_unit = rx.proj_unit.rep.dims[v]
            h_unit = rx.hom_unit.rep.dims[v]
            h_omega = rx.hom_omega.rep.dims[v]
            assert mat_rank(rx.incl.mats[v]) == d_omega == d_unit - x.dims[v]
            assert mat_rank(rx.mult.mats[v]) == x.dims[v]
            assert mat_rank(rx.unit_map.mats[v]) == x.dims[v] \
                == h_unit - h_omega
            assert mat_rank(rx.diff_map.mats[v]) == h_omega

    for trial in range(200):
        quiver = gen_quiver(cfg, trial)
        x = gen_rep(cfg, trial, "sqx", quiver)
        y = gen_rep(cfg, trial, "sqy", quiver)
        cocycle = gen_class(cfg, trial, "sqz", x, y).cocycle
        rx = std_resolutions(x)
        ry = std_resolutions(y)
        h, g_adj = proj_to_inj(x, y, cocycle)
        gmap = arrows_model_map(x, y, cocycle, rx.proj_omega)
        assert ry.unit_map @ gmap == h @ rx.incl
        assert ry.diff_map @ h == g_adj @ rx.mult

    for trial in range(100):
        quiver = gen_quiver(cfg, trial)
        x = gen_rep(cfg, trial, "nul", quiver)
        assert double_presentation_nullity(x).is_zero()

    print("AC9 PASS: kills(50 quivers), Euler(500), resolution exactness "
          "ranks(100), comparison squares(200), composite nullity(100)")


def test_ac10_desk_values():
    a2 = Quiver(2, ((0, 1),))
    kron = Quiver(2, ((0, 1), (0, 1)))
    for fs in (FP, QQ):
        s_top = indecomposable(a2, SIMPLE, 0, fs)
        s_soc = indecomposable(a2, SIMPLE, 1, fs)
        assert ext1_space(s_top, s_soc).dim == 1
        assert tau_inverse_rep(s_soc).dims == s_top.dims == (1, 0)
        assert tau_rep(s_top).dims == s_soc.dims == (0, 1)
        assert pairing_gram(s_top, s_soc).is_perfect

        k_top = indecomposable(kron, SIMPLE, 0, fs)
        k_soc = indecomposable(kron, SIMPLE, 1, fs)
        assert ext1_space(k_top, k_soc).dim == 2
        p_soc = indecomposable(kron, PROJECTIVE, 1, fs)
        assert tau_inverse_rep(p_soc).dims == (2, 3)
    print("AC10 PASS: desk values on the one-arrow and two-arrow quivers")
