import numpy as np
import pytest

from dualperron import (
    DualMatrix,
    DualNumber,
    DualVector,
    ExampleSpec,
    Flag,
    NonPositiveIterate,
    NonPositiveVector,
    RankDeficient,
    SolverConfig,
    StructureViolation,
    classify,
    collatz_step,
    eigen_residual,
    frn_norm,
    generate,
    is_unit,
    lambda_d_oracle,
    minimax_ratios,
    row_sum_bounds,
    solve,
    solve_dual_part,
    spectrum,
)

RNG = np.random.default_rng(3)


def assert_monotone(result):
    for k in range(len(result.lower) - 1):
        assert result.lower[k] <= result.lower[k + 1], f"lower bound regressed at k={k}"
        assert result.upper[k + 1] <= result.upper[k], f"upper bound regressed at k={k}"
        assert result.lower[k] <= result.upper[k]
    assert result.lower[-1] <= result.upper[-1]


class TestCollatzStep:
    def test_fixed_point_of_scaled_identity(self):
        B = DualMatrix(2 * np.eye(2), np.zeros((2, 2)))
        x = DualVector(np.full(2, np.sqrt(0.5)), np.zeros(2))
        x_next, lower, upper = collatz_step(B, x)
        assert lower == upper == DualNumber(2, 0)
        assert np.allclose(x_next.standard, x.standard)
        assert np.allclose(x_next.dual, 0.0)

    def test_hand_computed_ratios(self):
        B = DualMatrix(np.ones((2, 2)), np.zeros((2, 2)))
        xs = np.array([1.0, 0.5])
        x = DualVector(xs / np.linalg.norm(xs), np.zeros(2))
        _, lower, upper = collatz_step(B, x)
        # components of Bx are equal, so the ratios are 1.5/1 and 1.5/0.5
        assert lower.standard == pytest.approx(1.5)
        assert upper.standard == pytest.approx(3.0)
        assert lower.dual == upper.dual == 0.0

    def test_shifted_swap_family_is_stationary(self):
        A = generate(ExampleSpec("ex2"))
        B = DualMatrix(A.standard + np.eye(2), A.dual)
        x = DualVector(np.full(2, np.sqrt(0.5)), np.zeros(2))
        _, lower, upper = collatz_step(B, x)
        assert lower == upper
        assert lower.standard == pytest.approx(2.0)
        assert lower.dual == pytest.approx(2.0)

    def test_rejects_nonpositive_iterate(self):
        B = DualMatrix(np.eye(2), np.zeros((2, 2)))
        with pytest.raises(NonPositiveIterate):
            collatz_step(B, DualVector([1.0, 0.0], [0, 0]))


class TestSolve:
    def test_swap_family_closed_form(self):
        result = solve(generate(ExampleSpec("ex2")))
        assert result.flag == Flag.CONVERGED_FULL
        assert result.eigenvalue.standard == pytest.approx(1.0, abs=1e-12)
        assert result.eigenvalue.dual == pytest.approx(2.0, abs=1e-12)
        assert is_unit(result.eigenvector, tol=1e-12)
        assert result.residual <= 1e-12

    def test_star_family(self):
        A = generate(ExampleSpec("ex51", n=10))
        result = solve(A)
        assert result.flag == Flag.CONVERGED_FULL
        assert result.eigenvalue.standard == pytest.approx(3.0, abs=1e-6)
        # dominant eigenvector (3,1,...,1)/sqrt(18) against the Jordan dual part
        assert result.eigenvalue.dual == pytest.approx(29.0 / 18.0, abs=1e-6)
        assert result.eigenvalue > DualNumber(0, 0)
        assert_monotone(result)

    def test_refuses_reducible(self):
        with pytest.raises(StructureViolation, match="reducible"):
            solve(generate(ExampleSpec("ex1")))

    def test_refuses_negative_entries(self):
        A = DualMatrix([[0, 1], [-1, 0]], np.zeros((2, 2)))
        with pytest.raises(StructureViolation, match="nonnegative"):
            solve(A)

    def test_iteration_budget(self):
        result = solve(generate(ExampleSpec("ex51", n=10)), SolverConfig(k_max=3))
        assert result.flag == Flag.NOT_CONVERGED
        assert result.eigenvalue is None
        assert result.eigenvector is None
        assert result.residual is None
        assert result.iterations == 3
        assert len(result.lower) == 4  # k = 0..3

    def test_custom_start_must_be_positive(self):
        A = generate(ExampleSpec("ex52", n=4))
        bad = DualVector([1.0, 1.0, -1.0, 1.0], np.zeros(4))
        with pytest.raises(NonPositiveIterate):
            solve(A, SolverConfig(x0=bad))

    def test_custom_start_converges_to_same_pair(self):
        A = generate(ExampleSpec("ex52", n=6))
        base = solve(A)
        seeded = solve(A, SolverConfig(x0=DualVector(RNG.uniform(0.5, 2.0, 6), RNG.standard_normal(6))))
        assert seeded.eigenvalue.standard == pytest.approx(base.eigenvalue.standard, abs=1e-6)
        assert seeded.eigenvalue.dual == pytest.approx(base.eigenvalue.dual, abs=1e-5)

    def test_residual_contract(self):
        for ex, n in [("ex51", 10), ("ex52", 10), ("ex53", 10), ("ex54", 10)]:
            A = generate(ExampleSpec(ex, n=n))
            result = solve(A)
            assert result.flag != Flag.NOT_CONVERGED
            assert result.residual <= 10 * 1e-8 * frn_norm(A)
            assert result.residual == pytest.approx(
                eigen_residual(A, result.eigenvalue, result.eigenvector)
            )

    def test_eigenvector_is_unit(self):
        for ex, n in [("ex51", 10), ("ex52", 10), ("ex53", 10)]:
            result = solve(generate(ExampleSpec(ex, n=n)))
            assert is_unit(result.eigenvector, tol=1e-10)

    def test_trace_matches_bounds(self):
        result = solve(generate(ExampleSpec("ex52", n=8)))
        assert len(result.trace) == len(result.lower) == result.iterations + 1
        for k, rec in enumerate(result.trace):
            assert rec.k == k
            assert rec.lower_s == result.lower[k].standard
            assert rec.upper_d == result.upper[k].dual
            assert rec.gap_frn >= 0.0
            assert rec.residual_frn >= 0.0
        assert result.trace[-1].gap_frn <= 1e-8 * frn_norm(generate(ExampleSpec("ex52", n=8)))


class TestOracleAgreement:
    @pytest.mark.parametrize("ex,n", [("ex52", 10), ("ex53", 25), ("ex54", 40)])
    def test_standard_part_matches_dense_spectrum(self, ex, n):
        A = generate(ExampleSpec(ex, n=n))
        result = solve(A)
        rho = spectrum(A.standard).spectral_radius
        assert abs(result.eigenvalue.standard - rho) <= 1e-8 * rho
        # the dominant value is also an upper bound over the whole spectrum
        assert result.eigenvalue.standard <= rho + 1e-8


class TestShiftInvariance:
    def test_deshifted_results_agree(self):
        A = generate(ExampleSpec("ex52", n=10))
        results = [
            solve(A, SolverConfig(delta1=1e-13, delta2=1e-30, rho=rho, k_max=500))
            for rho in (0.5, 1.0, 2.0)
        ]
        for r in results:
            assert r.flag == Flag.CONVERGED_FULL
        for i in range(len(results)):
            for j in range(i + 1, len(results)):
                ri, rj = results[i], results[j]
                assert abs(ri.eigenvalue.standard - rj.eigenvalue.standard) <= 1e-10
                assert abs(ri.eigenvalue.dual - rj.eigenvalue.dual) <= 1e-10
                assert np.max(np.abs(ri.eigenvector.standard - rj.eigenvector.standard)) <= 1e-10
                assert np.max(np.abs(ri.eigenvector.dual - rj.eigenvector.dual)) <= 1e-10


class TestContractionRate:
    def test_weakly_positive_gap_contracts(self):
        A = generate(ExampleSpec("ex52", n=10))
        alpha = classify(A.standard, rho=1.0).alpha
        result = solve(A, SolverConfig(delta1=1e-300, delta2=1e-301, k_max=120))
        gaps = [u.standard - l.standard for l, u in zip(result.lower, result.upper)]
        for k in range(len(gaps) - 1):
            if gaps[k] <= 1e-13:
                break
            assert gaps[k + 1] <= alpha * gaps[k], f"contraction failed at k={k}"


class TestDualPartRecovery:
    def test_zero_dual_matrix(self):
        A = DualMatrix([[0, 1], [1, 0]], np.zeros((2, 2)))
        lam_d, x_d = solve_dual_part(A, 1.0, np.full(2, np.sqrt(0.5)))
        assert lam_d == pytest.approx(0.0, abs=1e-14)
        assert np.allclose(x_d, 0.0, atol=1e-14)

    def test_swap_family_symmetric_params(self):
        A = generate(ExampleSpec("ex2"))
        lam_d, x_d = solve_dual_part(A, 1.0, np.full(2, np.sqrt(0.5)))
        assert lam_d == pytest.approx(2.0, abs=1e-13)
        assert np.allclose(x_d, 0.0, atol=1e-13)
        assert eigen_residual(
            A, DualNumber(1.0, lam_d), DualVector(np.full(2, np.sqrt(0.5)), x_d)
        ) <= 1e-12

    def test_matches_left_eigenvector_formula(self):
        for n in (3, 5, 9):
            A = DualMatrix(RNG.uniform(0.1, 1.1, (n, n)), RNG.standard_normal((n, n)))
            report = spectrum(A.standard)
            lam_d, x_d = solve_dual_part(A, report.spectral_radius, report.right_vector)
            assert lam_d == pytest.approx(lambda_d_oracle(A, report), abs=1e-10)
            assert abs(report.right_vector @ x_d) <= 1e-10

    def test_rank_deficient_on_multiple_eigenvalue(self):
        A = DualMatrix(np.eye(3), np.ones((3, 3)))
        with pytest.raises(RankDeficient):
            solve_dual_part(A, 1.0, np.full(3, np.sqrt(1 / 3)))

    def test_flag2_recovery_matches_oracle(self):
        A = generate(ExampleSpec("ex52", n=10))
        result = solve(A, SolverConfig(delta1=1e-300, delta2=1e-12, k_max=400))
        assert result.flag == Flag.CONVERGED_STANDARD
        report = spectrum(A.standard)
        assert result.eigenvalue.dual == pytest.approx(lambda_d_oracle(A, report), abs=1e-9)
        assert is_unit(result.eigenvector, tol=1e-10)
        assert result.residual <= 1e-7 * frn_norm(A)


class TestBounds:
    def test_row_sums_of_identity(self):
        lo, hi = row_sum_bounds(DualMatrix(np.eye(2), np.zeros((2, 2))))
        assert lo == hi == DualNumber(1, 0)

    def test_swap_family_row_sums_equal_eigenvalue(self):
        A = generate(ExampleSpec("ex2"))
        lo, hi = row_sum_bounds(A)
        assert lo == hi == DualNumber(1, 2)
        assert lo == solve(A).eigenvalue

    def test_star_family_bracket(self):
        A = generate(ExampleSpec("ex51", n=10))
        lo, hi = row_sum_bounds(A)
        assert lo.standard == pytest.approx(1.0)
        assert hi.standard == pytest.approx(9.0)
        lam = solve(A).eigenvalue
        assert lo <= lam <= hi

    def test_minimax_at_the_eigenvector(self):
        A = generate(ExampleSpec("ex2"))
        result = solve(A)
        lo, hi = minimax_ratios(A, result.eigenvector)
        assert lo.standard == pytest.approx(1.0, abs=1e-10)
        assert hi.standard == pytest.approx(1.0, abs=1e-10)
        assert lo.dual == pytest.approx(2.0, abs=1e-9)
        assert hi.dual == pytest.approx(2.0, abs=1e-9)

    def test_minimax_all_ones_on_swap_family(self):
        A = generate(ExampleSpec("ex2"))
        lo, hi = minimax_ratios(A, DualVector(np.ones(2), np.zeros(2)))
        assert lo == hi == DualNumber(1, 2)

    def test_minimax_sandwich_random_vectors(self):
        A = generate(ExampleSpec("ex52", n=7))
        lam = solve(A).eigenvalue
        for _ in range(20):
            x = DualVector(RNG.uniform(0.2, 3.0, 7), RNG.standard_normal(7))
            lo, hi = minimax_ratios(A, x)
            assert lo <= lam <= hi

    def test_minimax_requires_positive_vector(self):
        A = generate(ExampleSpec("ex52", n=4))
        with pytest.raises(NonPositiveVector):
            minimax_ratios(A, DualVector([1, 1, 0, 1], np.zeros(4)))


class TestMonotonicity:
    @pytest.mark.parametrize("ex,n", [("ex51", 10), ("ex52", 10), ("ex53", 10), ("ex54", 12)])
    def test_bound_sequences(self, ex, n):
        result = solve(generate(ExampleSpec(ex, n=n)))
        assert_monotone(result)


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SolverConfig(k_max=0)
        with pytest.raises(ValueError):
            SolverConfig(delta1=0.0)
        with pytest.raises(ValueError):
            SolverConfig(rho=-1.0)
