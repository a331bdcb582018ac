import itertools
import math
import unittest

import numpy as np

from source.analysis import rip_exact, rip_monte_carlo, weighted_rip_exact
from source.cli.commands import random_sparse_signal
from source.numkit import RandomStream
from source.recovery import basis_pursuit, omp, weighted_basis_pursuit
from source.systems import fourier_system, sample_riesz_matrix


def gaussian_matrix(m: int, N: int, seed: int) -> np.ndarray:
    generator = RandomStream(seed, 11).generator()
    raw = generator.standard_normal((m, N)) + 1j * generator.standard_normal((m, N))
    return raw / math.sqrt(2.0 * m)


def brute_force_rip(A: np.ndarray, s: int) -> float:
    """Oráculo independente: enumera os suportes e calcula os autovalores um a um."""
    best = 0.0
    for support in itertools.combinations(range(A.shape[1]), s):
        columns = A[:, support]
        eigenvalues = np.linalg.eigvalsh(columns.conj().T @ columns - np.eye(s))
        best = max(best, float(np.max(np.abs(eigenvalues))))
    return best


def exhaustive_least_squares(A: np.ndarray, y: np.ndarray, s: int) -> np.ndarray:
    best_residual, best = math.inf, None
    for support in itertools.combinations(range(A.shape[1]), s):
        columns = A[:, support]
        coefficients = np.linalg.lstsq(columns, y, rcond=None)[0]
        residual = float(np.linalg.norm(columns @ coefficients - y))
        if residual < best_residual:
            best_residual = residual
            best = np.zeros(A.shape[1], dtype=np.complex128)
            best[list(support)] = coefficients
    return best


class TestRipOracle(unittest.TestCase):
    # (m, N, s): s = 3 fica em N = 10 para a amostragem cobrir bem o suporte extremo
    SHAPES = [(8, 12, 1), (8, 12, 2), (8, 10, 3), (6, 9, 2), (5, 8, 3)]

    def _fixtures(self):
        for seed in range(20):
            m, N, s = self.SHAPES[seed % len(self.SHAPES)]
            yield seed, gaussian_matrix(m, N, seed), s

    def test_enumeracao_coincide_com_o_oraculo(self):
        for seed, A, s in self._fixtures():
            with self.subTest(seed=seed):
                self.assertAlmostEqual(rip_exact(A, s).epsilon_s, brute_force_rip(A, s), delta=1e-10)

    def test_monte_carlo_entre_80_e_100_por_cento_do_exato(self):
        for seed, A, s in self._fixtures():
            with self.subTest(seed=seed):
                exact = rip_exact(A, s).epsilon_s
                estimate = rip_monte_carlo(A, s, 100_000, RandomStream(seed, 3)).epsilon_s

                self.assertLessEqual(estimate, exact + 1e-12)
                self.assertGreaterEqual(estimate, 0.8 * exact)


class TestOmpExhaustive(unittest.TestCase):
    def test_omp_coincide_com_minimos_quadrados_exaustivos(self):
        system = fourier_system(20)
        for seed in range(10):
            stream = RandomStream(seed, 21)
            A = sample_riesz_matrix(system, 200, stream).matrix
            for s in (1, 2):
                with self.subTest(seed=seed, s=s):
                    truth = random_sparse_signal(system.N, s, stream.child(s).generator())
                    y = A @ truth
                    outcome = omp(A, y, s)

                    np.testing.assert_allclose(outcome.estimate, exhaustive_least_squares(A, y, s), atol=1e-8)
                    self.assertEqual(outcome.support, tuple(int(j) for j in np.flatnonzero(truth)))


class TestBasisPursuitContract(unittest.TestCase):
    N, M, S = 64, 80, 3

    def _fixture(self, seed: int):
        stream = RandomStream(seed, 31)
        A = sample_riesz_matrix(fourier_system(self.N), self.M, stream).matrix
        truth = random_sparse_signal(self.N, self.S, stream.child(1).generator())
        return A, truth, stream.child(2).generator()

    def test_objetivo_nao_excede_a_verdade(self):
        for seed in range(5):
            with self.subTest(seed=seed):
                A, truth, _ = self._fixture(seed)
                outcome = basis_pursuit(A, A @ truth, 0.0)

                self.assertTrue(outcome.converged)
                self.assertLessEqual(outcome.objective, float(np.sum(np.abs(truth))) + 1e-6)
                self.assertLessEqual(outcome.residual_l2, 1e-8)

    def test_erro_com_ruido_limitado_por_zeta(self):
        zeta = 0.05
        for seed in range(5):
            with self.subTest(seed=seed):
                A, truth, generator = self._fixture(seed)
                noise = generator.standard_normal(self.M) + 1j * generator.standard_normal(self.M)
                noise *= 0.999 * zeta / np.linalg.norm(noise)
                outcome = basis_pursuit(A, A @ truth + noise, zeta)

                self.assertTrue(outcome.converged)
                self.assertLessEqual(outcome.objective, float(np.sum(np.abs(truth))) + 1e-6)
                self.assertLessEqual(outcome.residual_l2, zeta * (1.0 + 1e-6))
                # sistema de Fourier: C_psi/c_psi = 1
                self.assertLessEqual(float(np.linalg.norm(outcome.estimate - truth)), 14.0 * zeta)


class TestWeightedConsistency(unittest.TestCase):
    def test_rip_ponderada_com_pesos_unitarios(self):
        for seed in range(10):
            s = 1 + seed % 3
            A = gaussian_matrix(6, 10, 100 + seed)
            with self.subTest(seed=seed, s=s):
                weighted = weighted_rip_exact(A, s, np.ones(10)).epsilon_s
                self.assertEqual(weighted, rip_exact(A, s).epsilon_s)

    def test_bp_ponderado_com_pesos_unitarios(self):
        stream = RandomStream(5, 41)
        A = sample_riesz_matrix(fourier_system(32), 24, stream).matrix
        y = A @ random_sparse_signal(32, 2, stream.child(1).generator())

        plain = basis_pursuit(A, y, 0.01)
        weighted = weighted_basis_pursuit(A, y, 0.01, np.ones(32))

        self.assertEqual(weighted.algorithm, "bp")
        self.assertAlmostEqual(weighted.objective, plain.objective, delta=1e-8)


if __name__ == "__main__":
    unittest.main()
