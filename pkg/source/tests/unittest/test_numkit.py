import math
import unittest

import numpy as np

from source.numkit import (
    ArgumentError,
    DimensionError,
    EnumerationCapError,
    RandomStream,
    as_complex_matrix,
    check_enumeration_cap,
    count_supports,
    extremal_gram_eigs,
    iter_supports,
    least_squares,
    spectral_norm,
)


class TestComplexMatrix(unittest.TestCase):
    def test_matriz_convertida_e_somente_leitura(self):
        A = as_complex_matrix([[1, 2], [3, 4]])

        self.assertEqual(A.dtype, np.complex128)
        self.assertFalse(A.flags.writeable)
        with self.assertRaises(ValueError):
            A[0, 0] = 5

    def test_rejeita_vazia_nao_finita_e_1d(self):
        with self.assertRaisesRegex(DimensionError, "vazia"):
            as_complex_matrix(np.zeros((0, 3)))
        with self.assertRaisesRegex(DimensionError, "não finitas"):
            as_complex_matrix([[1.0, np.nan]])
        with self.assertRaisesRegex(DimensionError, "2-D"):
            as_complex_matrix([1.0, 2.0])

    def test_autovalores_extremos_do_gram(self):
        A = np.diag([3.0, 0.5])
        lam_min, lam_max = extremal_gram_eigs(A)

        self.assertAlmostEqual(lam_min, 0.25)
        self.assertAlmostEqual(lam_max, 9.0)
        self.assertAlmostEqual(spectral_norm(A), 3.0)

    def test_norma_espectral_homogenea_e_igual_ao_svd(self):
        generator = RandomStream(2).generator()
        A = generator.standard_normal((5, 4)) + 1j * generator.standard_normal((5, 4))
        norm = spectral_norm(A)

        self.assertAlmostEqual(norm, float(np.linalg.svd(A, compute_uv=False)[0]), places=12)
        for c in (2.5, -0.5j, 3.0 + 4.0j):
            with self.subTest(c=c):
                self.assertAlmostEqual(spectral_norm(c * A), abs(c) * norm, places=10)

    def test_gram_singular_quando_ha_menos_linhas(self):
        lam_min, lam_max = extremal_gram_eigs(np.ones((1, 3)))

        self.assertEqual(lam_min, 0.0)
        self.assertAlmostEqual(lam_max, 3.0)

    def test_minimos_quadrados_com_rank_deficiente(self):
        M = np.array([[1.0, 1.0], [1.0, 1.0], [0.0, 0.0]])
        with self.assertLogs("source.numkit.matrices", level="WARNING"):
            result = least_squares(M, [2.0, 2.0, 0.0])

        self.assertTrue(result.degenerate)
        self.assertEqual(result.rank, 1)
        np.testing.assert_allclose(result.solution, [1.0, 1.0], atol=1e-12)
        self.assertLess(result.residual_norm, 1e-12)

    def test_minimos_quadrados_rejeita_y_de_tamanho_errado(self):
        with self.assertRaisesRegex(DimensionError, "y com comprimento 2"):
            least_squares(np.eye(3), [1.0, 2.0])

    def test_residuo_nunca_excede_a_norma_de_y(self):
        generator = RandomStream(9).generator()
        for trial in range(10):
            with self.subTest(trial=trial):
                M = generator.standard_normal((6, 3)) + 1j * generator.standard_normal((6, 3))
                y = generator.standard_normal(6) + 1j * generator.standard_normal(6)
                result = least_squares(M, y)

                self.assertLessEqual(result.residual_norm, np.linalg.norm(y) + 1e-12)
                self.assertAlmostEqual(result.residual_norm, np.linalg.norm(M @ result.solution - y), places=10)


class TestRandomStream(unittest.TestCase):
    def test_mesmo_par_gera_mesma_sequencia(self):
        first = RandomStream(11, 3).generator().standard_normal(8)
        second = RandomStream(11, 3).generator().standard_normal(8)

        np.testing.assert_array_equal(first, second)

    def test_fluxos_filhos_sao_distintos_e_reprodutiveis(self):
        base = RandomStream(5)
        a = base.child(0).generator().random(4)
        b = base.child(1).generator().random(4)

        self.assertFalse(np.allclose(a, b))
        np.testing.assert_array_equal(a, RandomStream(5).child(0).generator().random(4))
        self.assertEqual(base.child(2).seed, 5)

    def test_rejeita_semente_invalida(self):
        with self.assertRaisesRegex(ArgumentError, "fora de"):
            RandomStream(-1)
        with self.assertRaisesRegex(ArgumentError, "inteiro"):
            RandomStream(1.5)
        with self.assertRaisesRegex(ArgumentError, "negativo"):
            RandomStream(0).child(-1)

    def test_to_json_dict(self):
        self.assertEqual(RandomStream(7, 2).to_json_dict(), {"seed": 7, "stream_id": 2})


class TestSupports(unittest.TestCase):
    def test_enumeracao_lexicografica(self):
        supports = list(iter_supports(4, 2))

        self.assertEqual(len(supports), count_supports(4, 2))
        self.assertEqual(supports[0], (0, 1))
        self.assertEqual(supports[-1], (2, 3))

    def test_limite_de_enumeracao(self):
        with self.assertRaisesRegex(EnumerationCapError, str(math.comb(30, 5))):
            iter_supports(30, 5, cap=1000)
        check_enumeration_cap(10, cap=10)

    def test_s_fora_do_intervalo(self):
        with self.assertRaisesRegex(ArgumentError, "s deve estar"):
            iter_supports(3, 4)
        with self.assertRaises(ArgumentError):
            iter_supports(3, 0)


if __name__ == "__main__":
    unittest.main()
