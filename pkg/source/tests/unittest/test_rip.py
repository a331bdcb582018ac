import itertools
import unittest

import numpy as np

from source.analysis import (
    covariance_gram,
    empirical_process_sup,
    rip_exact,
    rip_monte_carlo,
    weighted_rip_exact,
)
from source.analysis.rip import maximal_weighted_supports
from source.constantes.models import RipMethod
from source.numkit import ArgumentError, EnumerationCapError, RandomStream
from source.recovery import WeightVector
from source.systems import fourier_system, l2_gram, sample_riesz_matrix


def rip_oracle(A: np.ndarray, s: int) -> float:
    """max_S max(|λ_min − 1|, |λ_max − 1|) calculado suporte a suporte."""
    worst = 0.0
    for support in itertools.combinations(range(A.shape[1]), s):
        block = A[:, support]
        eigenvalues = np.linalg.eigvalsh(block.conj().T @ block)
        worst = max(worst, abs(eigenvalues[0] - 1.0), abs(eigenvalues[-1] - 1.0))
    return worst


class TestRipExact(unittest.TestCase):
    def test_identidade_tem_constante_zero(self):
        report = rip_exact(np.eye(5), 3)

        self.assertEqual(report.epsilon_s, 0.0)
        self.assertEqual(report.method, RipMethod.EXACT)
        self.assertEqual(report.supports_examined, 10)

    def test_coincide_com_oracle(self):
        generator = RandomStream(99).generator()
        A = (generator.standard_normal((6, 9)) + 1j * generator.standard_normal((6, 9))) / np.sqrt(12)
        report = rip_exact(A, 2)

        self.assertAlmostEqual(report.epsilon_s, rip_oracle(A, 2), places=12)
        self.assertEqual(len(report.extremal_support), 2)

    def test_suporte_extremo_atinge_o_valor(self):
        A = np.diag([1.0, 1.0, 1.5, 1.0])
        report = rip_exact(A, 1)

        self.assertAlmostEqual(report.epsilon_s, 1.25)
        self.assertEqual(report.extremal_support, (2,))

    def test_limite_de_enumeracao(self):
        with self.assertRaises(EnumerationCapError):
            rip_exact(np.eye(30), 6, cap=100)


class TestRipMonteCarlo(unittest.TestCase):
    def test_limite_inferior_do_valor_exato(self):
        ensemble = sample_riesz_matrix(fourier_system(10), 6, RandomStream(2))
        exact = rip_exact(ensemble.matrix, 2).epsilon_s
        estimate = rip_monte_carlo(ensemble.matrix, 2, 20000, RandomStream(3))

        self.assertLessEqual(estimate.epsilon_s, exact + 1e-12)
        self.assertGreaterEqual(estimate.epsilon_s, 0.5 * exact)
        self.assertEqual(estimate.trials, 20000)

    def test_reprodutivel(self):
        A = sample_riesz_matrix(fourier_system(8), 5, RandomStream(1)).matrix
        first = rip_monte_carlo(A, 2, 500, RandomStream(4))
        second = rip_monte_carlo(A, 2, 500, RandomStream(4))

        self.assertEqual(first.epsilon_s, second.epsilon_s)

    def test_argumentos_invalidos(self):
        with self.assertRaisesRegex(ArgumentError, "trials"):
            rip_monte_carlo(np.eye(3), 1, 0, RandomStream(0))
        with self.assertRaisesRegex(ArgumentError, "s deve estar"):
            rip_monte_carlo(np.eye(3), 4, 10, RandomStream(0))


class TestWeightedRip(unittest.TestCase):
    def test_pesos_unitarios_coincidem_com_rip_exata(self):
        for seed in range(3):
            A = sample_riesz_matrix(fourier_system(8), 5, RandomStream(seed)).matrix
            weighted = weighted_rip_exact(A, 2, np.ones(8))

            self.assertEqual(weighted.epsilon_s, rip_exact(A, 2).epsilon_s)

    def test_suportes_maximais(self):
        supports = maximal_weighted_supports(np.array([1.0, 1.0, 2.0]), 4.0)

        self.assertEqual(supports, [(0, 1), (2,)])

    def test_limite_conta_subconjuntos_visitados(self):
        # vazio, 10 unitários e 45 pares; só os pares são maximais
        supports = maximal_weighted_supports(np.ones(10), 2.0, cap=56)

        self.assertEqual(len(supports), 45)
        with self.assertRaisesRegex(EnumerationCapError, "mais de 55 subconjuntos"):
            maximal_weighted_supports(np.ones(10), 2.0, cap=55)

    def test_nenhum_suporte_admissivel(self):
        report = weighted_rip_exact(np.eye(2), 0.5, WeightVector(np.array([1.0, 2.0])))

        self.assertTrue(report.degenerate)
        self.assertEqual(report.extremal_support, ())


class TestEmpiricalProcess(unittest.TestCase):
    def test_covariancia_identidade_reproduz_a_rip(self):
        ensemble = sample_riesz_matrix(fourier_system(8), 6, RandomStream(5))
        report = empirical_process_sup(ensemble, l2_gram(fourier_system(8)), 2)

        self.assertEqual(report.method, RipMethod.EMPIRICAL_PROCESS)
        self.assertAlmostEqual(report.epsilon_s, rip_exact(ensemble.matrix, 2).epsilon_s, places=10)

    def test_supremo_decresce_com_m(self):
        system = fourier_system(16)
        gram = l2_gram(system)
        medians = {
            m: float(np.median([
                empirical_process_sup(sample_riesz_matrix(system, m, RandomStream(seed)), gram, 2).epsilon_s
                for seed in range(50)
            ]))
            for m in (64, 256)
        }

        self.assertLess(medians[256], medians[64])
        self.assertTrue(0.35 <= medians[256] / medians[64] <= 0.7)

    def test_gram_por_polarizacao(self):
        sigma = np.array([[2.0, 0.5 - 0.25j], [0.5 + 0.25j, 1.0]])
        gram = covariance_gram(lambda f: float(np.vdot(f, sigma @ f).real), 2)

        np.testing.assert_allclose(gram, sigma, atol=1e-12)

    def test_gram_com_shape_errado(self):
        with self.assertRaisesRegex(ArgumentError, "esperado 3x3"):
            covariance_gram(np.eye(2), 3)


if __name__ == "__main__":
    unittest.main()
