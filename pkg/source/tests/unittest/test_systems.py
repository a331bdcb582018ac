import itertools
import math
import unittest

import numpy as np

from source.numkit import ArgumentError, RandomStream, SamplingError
from source.systems import (
    coherence_sampler,
    fourier_system,
    gauss_legendre_rule,
    h10_gram,
    hat_hierarchical_system,
    l2_gram,
    local_coherence,
    sample_riesz_matrix,
    sine_h10_system,
    sparse_eigen_bounds,
)


class TestFunctionSystems(unittest.TestCase):
    def test_quadratura_integra_polinomios(self):
        rule = gauss_legendre_rule(4, 8)

        self.assertAlmostEqual(float(rule.integrate(rule.nodes**5)), 1.0 / 6.0, places=14)
        self.assertAlmostEqual(float(rule.weights.sum()), 1.0, places=14)

    def test_fourier_ortonormal_em_l2(self):
        np.testing.assert_allclose(l2_gram(fourier_system(8)), np.eye(8), atol=1e-12)

    def test_senos_ortonormais_em_h10(self):
        np.testing.assert_allclose(h10_gram(sine_h10_system(10)), np.eye(10), atol=1e-12)

    def test_chapeus_hierarquicos_ortonormais_em_h10(self):
        system = hat_hierarchical_system(4)

        self.assertEqual(system.N, 15)
        self.assertEqual(list(system.level_of[:3]), [1, 2, 2])
        np.testing.assert_allclose(h10_gram(system), np.eye(15), atol=1e-12)

    def test_chapeu_de_primeiro_nivel(self):
        system = hat_hierarchical_system(1)
        values = system.evaluate(0, [0.0, 0.25, 0.5, 1.0])

        np.testing.assert_allclose(values.real, [0.0, 0.25, 0.5, 0.0])
        np.testing.assert_allclose(system.derivative(0, [0.25, 0.75]).real, [1.0, -1.0])

    def test_limite_uniforme_dos_senos(self):
        system = sine_h10_system(6)
        values = system.matrix(np.linspace(0.0, 1.0, 501))

        self.assertLessEqual(float(np.abs(values).max()), system.K_psi + 1e-12)
        self.assertAlmostEqual(system.K_psi, math.sqrt(2.0) / math.pi)

    def test_indices_invalidos(self):
        with self.assertRaisesRegex(ArgumentError, "Índice fora"):
            fourier_system(4).matrix([0.1], [4])
        with self.assertRaises(ArgumentError):
            hat_hierarchical_system(0)


class TestEnsembles(unittest.TestCase):
    def test_escala_e_reprodutibilidade(self):
        system = fourier_system(16)
        first = sample_riesz_matrix(system, 8, RandomStream(3))
        second = sample_riesz_matrix(system, 8, RandomStream(3))

        self.assertEqual(first.matrix.shape, (8, 16))
        self.assertAlmostEqual(first.scaling, 1.0 / math.sqrt(8))
        np.testing.assert_allclose(np.abs(first.matrix), first.scaling)
        np.testing.assert_array_equal(first.matrix, second.matrix)
        self.assertEqual(first.to_json_dict()["kind"], "riesz")

    def test_m_invalido(self):
        with self.assertRaisesRegex(ArgumentError, "m deve ser"):
            sample_riesz_matrix(fourier_system(4), 0, RandomStream(0))

    def test_coherence_sampler_reescala_linhas(self):
        B = np.diag([2.0, 1.0, 0.5])
        profile = local_coherence(B)
        ensemble = coherence_sampler(B, profile, 1.0, 5, RandomStream(1))

        self.assertAlmostEqual(profile.nu_l1, 5.25)
        norms = np.linalg.norm(ensemble.matrix, axis=1)
        np.testing.assert_allclose(norms, math.sqrt(5.25) / math.sqrt(5))
        np.testing.assert_allclose(ensemble.probabilities, np.array([4.0, 1.0, 0.25]) / 5.25)

    def test_coherence_sampler_exige_perfil_dominante(self):
        B = np.eye(2)
        with self.assertRaisesRegex(SamplingError, "não domina"):
            coherence_sampler(B, local_coherence(0.5 * B), 1.0, 3, RandomStream(0))
        zero = local_coherence(np.zeros((2, 2)))
        with self.assertRaisesRegex(SamplingError, "soma zero"):
            coherence_sampler(np.zeros((2, 2)), zero, 1.0, 3, RandomStream(0))

    def test_limites_esparsos_do_gram(self):
        bounds = sparse_eigen_bounds(np.diag([1.0, 2.0, 3.0]), 2)

        self.assertAlmostEqual(bounds.c_B, 1.0)
        self.assertAlmostEqual(bounds.C_B, 9.0)
        self.assertEqual(bounds.supports_enumerated, 3)

    def test_amostragem_de_riesz_preserva_a_energia_em_media(self):
        f = np.zeros(8, dtype=np.complex128)
        f[[0, 3, 5]] = [1.0, 0.5j, -0.25]
        base = RandomStream(7)
        energies = [
            np.linalg.norm(sample_riesz_matrix(fourier_system(8), 50, base.child(i)).matrix @ f) ** 2
            for i in range(200)
        ]

        self.assertAlmostEqual(float(np.mean(energies)), np.linalg.norm(f) ** 2, delta=0.05 * np.linalg.norm(f) ** 2)

    def test_amostragem_por_coerencia_sem_vies(self):
        generator = RandomStream(13).generator()
        B = generator.standard_normal((6, 4)) + 1j * generator.standard_normal((6, 4))
        f = np.array([1.0, -0.5, 0.25j, 2.0])
        C_B = 2.0
        ensemble = coherence_sampler(B, local_coherence(B), C_B, 40_000, RandomStream(14))

        expected = np.linalg.norm(B @ f) ** 2 / C_B
        self.assertAlmostEqual(np.linalg.norm(ensemble.matrix @ f) ** 2, expected, delta=0.05 * expected)

    def test_coerencia_local_e_justa(self):
        generator = RandomStream(4).generator()
        B = generator.standard_normal((5, 7)) + 1j * generator.standard_normal((5, 7))
        profile = local_coherence(B)
        squares = np.abs(B) ** 2

        np.testing.assert_allclose(profile.nu, squares.max(axis=1), rtol=1e-14)
        self.assertTrue(np.all(squares <= profile.nu[:, None] * (1.0 + 1e-14)))
        self.assertTrue(np.all(np.isclose(squares, profile.nu[:, None], rtol=1e-14).any(axis=1)))
        coherence_sampler(B, profile, 1.0, 3, RandomStream(0))

    def test_limites_esparsos_monotonos_e_exaustivos(self):
        generator = RandomStream(6).generator()
        B = generator.standard_normal((6, 5))
        previous = None
        for s in range(1, 6):
            with self.subTest(s=s):
                bounds = sparse_eigen_bounds(B, s)
                eigenvalues = [
                    np.linalg.eigvalsh(B[:, list(S)].T @ B[:, list(S)])
                    for S in itertools.combinations(range(5), s)
                ]

                self.assertAlmostEqual(bounds.c_B, max(min(e[0] for e in eigenvalues), 0.0), places=10)
                self.assertAlmostEqual(bounds.C_B, max(e[-1] for e in eigenvalues), places=10)
                self.assertEqual(bounds.supports_enumerated, math.comb(5, s))
                if previous is not None:
                    self.assertLessEqual(bounds.c_B, previous.c_B + 1e-12)
                    self.assertGreaterEqual(bounds.C_B, previous.C_B - 1e-12)
                previous = bounds


if __name__ == "__main__":
    unittest.main()
