"""End-to-end acceptance checks.

Each test covers one headline guarantee of the package and prints a visible
PASS/FAIL line so the suite doubles as a report:

    python3 -m pytest tests/test_acceptance.py -q
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from codespectra.designer import (
    check_lower_bound,
    design_concat,
    equivalence_G1,
    single_code_lower_bound,
)
from codespectra.genfun import genfun_from_uspectrum, genfun_of_set
from codespectra.gf import field_make
from codespectra.ldgm import (
    J,
    K_q,
    LdgmParams,
    delta_qd,
    kq_product,
    kq_series,
    ldgm_conditional_spectrum,
    ldgm_ensemble_exact,
    ldgm_sample,
    lemma2_bound,
)
from codespectra.macwilliams import (
    enumerate_subspace,
    joint_transpose_reference,
    mw_joint_transpose,
    mw_transform,
    orthogonal,
    random_subspace,
)
from codespectra.mrd import (
    enumerate_code,
    gabidulin_ensemble,
    gabidulin_make,
    kernel_stats,
    verify_mrd,
    verify_scc,
)
from codespectra.spectra import (
    CodeEnsemble,
    LinearCode,
    all_matrices_ensemble,
    all_vectors,
    alpha,
    alpha_table,
    conditional_at,
    ensemble_avg_joint_spectrum,
    enumerate_types,
    partition_make,
    point_distribution,
    randomize,
    type_of,
    u_set_spectrum,
    zero_type,
)

f2 = field_make(2)
f3 = field_make(3)


@pytest.fixture
def report(capsys):
    def _report(label):
        class _Ctx:
            def __enter__(self):
                return self

            def __exit__(self, et, ev, tb):
                with capsys.disabled():
                    print(f"[{'FAIL' if et else 'PASS'}] {label}")
                return False

        return _Ctx()

    return _report


def test_criterion_1_gabidulin_example(report):
    with report("1. binary 2x2 rank-metric code: reference codewords and uniformity"):
        spec = gabidulin_make(2, 2, 2, 1)
        mats = {cw.entries for cw in enumerate_code(spec)}
        assert mats == {
            ((0, 0), (0, 0)),
            ((1, 0), (0, 1)),
            ((0, 1), (1, 1)),
            ((1, 1), (1, 0)),
        }
        E1 = gabidulin_ensemble(spec)
        assert verify_scc(E1)["scc_good"]
        offset = ((1, 0), (0, 0))
        E3 = gabidulin_ensemble(spec, offset=offset)
        assert verify_scc(E3)["scc_good"]
        mixed = CodeEnsemble(
            support=tuple((c, p / 2) for c, p in E1.support + E3.support),
            description="mixed",
        )
        assert verify_scc(mixed)["scc_good"]


def test_criterion_2_mrd_property(report):
    with report("2. rank-distance optimality across the small parameter grid"):
        for q in (2, 3):
            for n in range(1, 5):
                for m in range(1, 5):
                    for k in range(1, min(n, m) + 1):
                        if q ** (k * max(n, m)) > 4096:
                            continue
                        rep = verify_mrd(gabidulin_make(q, n, m, k))
                        assert rep["size_ok"], (q, n, m, k)
                        assert rep["mrd_ok"], (q, n, m, k)


def test_criterion_3_kernel_identity(report):
    with report("3. kernel-size mean identity and trivial-kernel bound"):
        cases = [
            gabidulin_ensemble(gabidulin_make(2, 2, 2, 1)),
            gabidulin_ensemble(gabidulin_make(2, 2, 2, 2)),
            gabidulin_ensemble(gabidulin_make(3, 2, 2, 2)),
            all_matrices_ensemble(f2, 2, 2),
            all_matrices_ensemble(f3, 2, 2),
        ]
        for E in cases:
            verify_scc(E)
            stats = kernel_stats(E)
            assert stats["mean"] == stats["expected_mean"]
            assert stats["p_trivial_kernel"] >= stats["trivial_kernel_bound"]
        # the binary square k = n = 2 case, exactly: the code is all sixteen
        # matrices (zero included), so the trivial-kernel probability is the
        # invertible fraction 6/16 = 3/8, strictly above the 1/4 bound
        stats = kernel_stats(gabidulin_ensemble(gabidulin_make(2, 2, 2, 2)))
        assert stats["mean"] == Fraction(7, 4)
        assert stats["p_trivial_kernel"] == Fraction(3, 8)
        assert stats["trivial_kernel_bound"] == Fraction(1, 4)
        ns = 2
        assert stats["p_trivial_kernel"] == Fraction(2 ** (ns + 1) - 2, 2 ** (2 * ns))


def _random_partition(rng, n):
    while True:
        labels = [rng.randrange(3) for _ in range(n)]
        blocks = {}
        for i, lab in enumerate(labels):
            blocks.setdefault(lab, []).append(i)
        if blocks:
            return partition_make([tuple(b) for b in blocks.values()], n)


def test_criterion_4_macwilliams(report):
    with report("4. dual transform vs brute-force duals, plain and partitioned"):
        rng = random.Random(2024)
        f4 = field_make(2, 2)
        plan = [(f2, 10, 100), (f3, 6, 60), (f4, 4, 40)]
        for field, nmax, count in plan:
            for i in range(count):
                n = rng.randint(1, nmax)
                A = random_subspace(field, n, rng.randrange(10**9))
                dual_members = enumerate_subspace(orthogonal(A))
                assert mw_transform(A) == genfun_of_set(dual_members, field)
                for _ in range(3):
                    part = _random_partition(rng, n)
                    want = genfun_from_uspectrum(
                        u_set_spectrum(dual_members, field, part)
                    )
                    assert mw_transform(A, partition=part) == want
        # joint transpose identity, exhaustively over small binary matrices
        for n, m in itertools.product(range(1, 4), repeat=2):
            for flat in itertools.product(range(2), repeat=n * m):
                A = tuple(tuple(flat[i * m : (i + 1) * m]) for i in range(n))
                assert mw_joint_transpose(f2, A) == joint_transpose_reference(f2, A)


def test_criterion_5_alpha_identities(report):
    with report("5. uniform-ensemble alpha = 1 and the point-probability identity"):
        for n, m in ((1, 1), (1, 2), (2, 1), (2, 2)):
            E = all_matrices_ensemble(f2, n, m)
            for (P, Q), a in alpha_table(E).items():
                if not P.is_zero_type():
                    assert a == 1
            Et = randomize(E, "both")
            avg = ensemble_avg_joint_spectrum(Et)
            for x in all_vectors(f2, n):
                for y in all_vectors(f2, m):
                    a = alpha(Et, type_of(x, f2), type_of(y, f2), avg=avg)
                    assert point_distribution(Et, x).get(y, Fraction(0)) == a / 2**m


def test_criterion_6_ldgm_exactness(report):
    with report("6. sparse-generator ensemble conditional = check-stage formula"):
        for q, c, d, n in ((2, 1, 2, 2), (2, 2, 2, 1), (3, 1, 2, 1)):
            field = field_make(q)
            params = LdgmParams(field, c, d, n)
            E = ldgm_ensemble_exact(params)
            avg = ensemble_avg_joint_spectrum(E)
            for P in enumerate_types(params.in_len, field):
                cond = conditional_at(avg, P)
                for Q in enumerate_types(params.out_len, field):
                    assert cond.get(Q, Fraction(0)) == ldgm_conditional_spectrum(
                        params, P, Q
                    )


def test_criterion_7_bound_chain(report):
    with report("7. optimized exponent <= two-point exponent <= closed-form cap"):
        for q, d in ((2, 3), (2, 35), (3, 4)):
            for i in range(21):
                for j in range(21):
                    x, y = i / 20, j / 20
                    jv = J(q, d, x, y)
                    assert delta_qd(q, d, x, y, grid=200) <= jv + 1e-9
                    assert jv <= lemma2_bound(q, d, x, y) + 1e-9


def test_criterion_8_design_example(report):
    with report("8. concatenation design picks degree 35, fan-in 14, bound 0.05"):
        cert = design_concat(2, Fraction(1, 5), 0.05, 0.95, 0.05)
        assert cert["d"] == 35
        assert cert["c"] == 14
        assert cert["rho0"] <= 0.01
        assert cert["bound"] <= 0.05
        assert cert["ok"]


def test_criterion_9_kq(report):
    with report("9. invertibility constant: series = product, and 3/8 beats it"):
        assert abs(kq_product(2, 64) - kq_series(2, 64)) < Fraction(1, 10**12)
        assert K_q(2) == pytest.approx(0.2887880950866, abs=1e-10)
        res = equivalence_G1(LinearCode(f2, ((1, 0), (0, 1))))
        assert res["probability"] == Fraction(3, 8)
        assert res["probability"] > kq_product(2, 64)


def test_criterion_10_lower_bound(report):
    with report("10. per-code max alpha never below the balanced-count floor"):
        rng = random.Random(7)
        codes = []
        # rank-metric codewords reinterpreted as generator matrices
        for spec_args in ((2, 2, 2, 1), (2, 3, 3, 2), (2, 4, 2, 1)):
            for cw in enumerate_code(gabidulin_make(*spec_args))[:6]:
                codes.append(LinearCode(f2, cw.entries))
        # sparse-generator samples
        for seed in range(16):
            params = LdgmParams(f2, 2, 4, rng.randint(1, 3))
            code, _ = ldgm_sample(params, seed)
            codes.append(code)
        # dense random matrices
        while len(codes) < 50:
            n = rng.randint(1, 6)
            m = rng.randint(1, 12)
            gen = tuple(tuple(rng.randrange(2) for _ in range(m)) for _ in range(n))
            codes.append(LinearCode(f2, gen))
        assert len(codes) >= 50
        for code in codes[:50]:
            res = check_lower_bound(code)
            assert res["ok"], code
            assert res["max_alpha"] >= single_code_lower_bound(2, code.m)
