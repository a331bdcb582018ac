import math
import unittest

import numpy as np

from source.corsing import (
    AdrProblem,
    CorsingConfig,
    PetrovGalerkinSetup,
    assemble_forcing,
    assemble_full,
    build_setup,
    choose_truncation,
    condition_number_kappa,
    corsing_admissible_interval,
    corsing_error_bound,
    corsing_failure_probability,
    corsing_rip_inputs,
    corsing_solve,
    diffusion_exact_derivative,
    evaluate_solution,
    h1_error,
    h10_projection,
    make_profile,
    preconditioner,
    prepare_corsing,
    scaling_identity_check,
    truncate,
)
from source.numkit import ArgumentError, RandomStream, TruncationError
from source.systems import hat_hierarchical_system, sine_h10_system


def varying(value: float):
    """Perfil constante escondido atrás de uma função, para forçar a quadratura."""
    return make_profile(lambda x: np.full_like(x, value))


class TestProblem(unittest.TestCase):
    def test_perfis(self):
        self.assertEqual(make_profile(2).constant, 2.0)
        sine = make_profile({"profile": "sine", "amplitude": 2.0})
        self.assertAlmostEqual(float(sine(np.array([0.5]))[0]), 2.0)
        with self.assertRaisesRegex(ArgumentError, "Perfil desconhecido"):
            make_profile({"profile": "gauss"})
        with self.assertRaisesRegex(ArgumentError, "Parâmetros inválidos"):
            make_profile({"profile": "sine", "phase": 1.0})

    def test_difusao_precisa_ser_positiva(self):
        with self.assertRaisesRegex(ArgumentError, "não elíptica"):
            AdrProblem.from_values(mu=-1.0)

    def test_constantes_em_forma_fechada(self):
        setup = build_setup(AdrProblem.from_values(mu=1.0, beta_adv=2.0, rho_reac=-1.0), sine_h10_system(4), sine_h10_system(32))

        self.assertAlmostEqual(setup.alpha_infsup, 1.0 - 1.0 / math.pi**2)
        self.assertAlmostEqual(setup.beta_cont, 1.0 + 2.0 / math.pi + 1.0 / math.pi**2)
        self.assertFalse(setup.estimated)

    def test_constantes_estimadas_para_coeficientes_variaveis(self):
        problem = AdrProblem.from_values(mu={"profile": "polynomial", "coefficients": [1.0, 1.0]})
        setup = build_setup(problem, sine_h10_system(4), sine_h10_system(32))

        self.assertTrue(setup.estimated)
        self.assertGreater(setup.alpha_infsup, 0.9)
        self.assertLess(setup.beta_cont, 2.0 + 1e-6)

    def test_kappa(self):
        trial, test = sine_h10_system(4), sine_h10_system(32)
        diffusion = build_setup(AdrProblem.from_values(), trial, test)
        self.assertEqual(condition_number_kappa(diffusion), 1.0)

        advection = build_setup(AdrProblem.from_values(beta_adv=2.0), trial, test)
        with self.assertLogs("source.corsing.problem", level="WARNING") as logs:
            kappa = condition_number_kappa(advection)
        self.assertAlmostEqual(kappa, (1.0 + 2.0 / math.pi) ** 2)
        self.assertIn("13/12", logs.output[0])

    def test_config(self):
        config = CorsingConfig(s=4)

        self.assertEqual(config.samples(63), 67)
        self.assertEqual(config.iterations(), 48)
        with self.assertRaisesRegex(ArgumentError, "gamma"):
            CorsingConfig(s=1, gamma=1.0)


class TestAssembly(unittest.TestCase):
    def _compare(self, trial):
        setup = PetrovGalerkinSetup(trial, sine_h10_system(48), 1.0, 1.0)
        closed = AdrProblem.from_values(mu=2.0, beta_adv=1.0, rho_reac=3.0)
        quadrature = AdrProblem(varying(2.0), varying(1.0), varying(3.0), varying(1.0))

        B_closed, c_closed = assemble_full(setup, closed, trial.N, 48)
        B_quad, c_quad = assemble_full(setup, quadrature, trial.N, 48)

        np.testing.assert_allclose(B_quad, B_closed, atol=1e-9)
        np.testing.assert_allclose(c_quad, c_closed, atol=1e-9)

    def test_senos_forma_fechada_coincide_com_quadratura(self):
        self._compare(sine_h10_system(10))

    def test_chapeus_forma_fechada_coincide_com_quadratura(self):
        self._compare(hat_hierarchical_system(3))

    def test_difusao_pura_com_senos_e_identidade(self):
        setup = PetrovGalerkinSetup(sine_h10_system(6), sine_h10_system(9), 1.0, 1.0)
        B, _ = assemble_full(setup, AdrProblem.from_values(), 6, 9)

        np.testing.assert_allclose(B, np.eye(9, 6), atol=1e-14)

    def test_forcante_constante(self):
        c = assemble_forcing(AdrProblem.from_values(), 4)
        q = np.arange(1, 5)

        np.testing.assert_allclose(c, np.where(q % 2 == 1, 2.0 * math.sqrt(2.0) / (q * math.pi) ** 2, 0.0), atol=1e-15)

    def test_dimensoes_fora_das_bases(self):
        setup = PetrovGalerkinSetup(sine_h10_system(4), sine_h10_system(8), 1.0, 1.0)
        with self.assertRaisesRegex(ArgumentError, "M=9"):
            assemble_full(setup, AdrProblem.from_values(), 4, 9)


class TestTruncation(unittest.TestCase):
    def test_menor_M_admissivel(self):
        self.assertEqual(choose_truncation([0.4, 0.3, 0.2, 0.1, 0.0], 1, 0.5, 1.0), 2)

    def test_limite_de_teste_insuficiente(self):
        with self.assertRaisesRegex(TruncationError, "Limite de teste 3"):
            choose_truncation([1.0, 1.0, 1.0], 1, 0.5, 1.0)

    def test_cauda_nula_alem_do_limite_aceita_m_no_limite(self):
        self.assertEqual(choose_truncation([1.0, 1.0, 1.0], 1, 0.5, 1.0, tail_known_zero=True), 3)
        self.assertEqual(choose_truncation([0.5, 0.5, 0.0, 0.0], 2, 0.5, 1.0), 2)

    def test_gamma_invalido(self):
        with self.assertRaises(ArgumentError):
            choose_truncation([1.0, 0.0], 1, 1.0, 1.0)


class TestCorsingSolver(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.problem = AdrProblem.from_values()
        cls.setup = build_setup(cls.problem, sine_h10_system(15), sine_h10_system(256))
        cls.config = CorsingConfig(s=2, m=40, seed=3)
        cls.design = prepare_corsing(cls.setup, cls.problem, cls.config)

    def test_desenho_da_difusao(self):
        self.assertEqual(self.design.M, 15)
        self.assertEqual(self.design.kappa, 1.0)
        np.testing.assert_allclose(self.design.probabilities, np.full(15, 1.0 / 15.0))

    def test_solucao_reprodutivel_e_indices_a_partir_de_um(self):
        first = corsing_solve(self.setup, self.problem, self.config, self.design)
        second = corsing_solve(self.setup, self.problem, self.config, self.design)

        self.assertEqual(first.drawn_tests, second.drawn_tests)
        np.testing.assert_array_equal(first.coefficients, second.coefficients)
        self.assertEqual(len(first.drawn_tests), 40)
        self.assertTrue(all(1 <= q <= 15 for q in first.drawn_tests))
        self.assertEqual(first.M_used, 15)

    def test_coeficientes_sorteados_sao_recuperados(self):
        with self.assertLogs("source.corsing.solver", level="WARNING") as logs:
            solution = corsing_solve(self.setup, self.problem, self.config, self.design)

        self.assertTrue(any("min(k, m, N)" in line for line in logs.output))
        drawn = np.array(sorted(set(solution.drawn_tests))) - 1
        np.testing.assert_allclose(solution.coefficients[drawn], self.design.c[drawn], atol=1e-10)
        self.assertFalse(solution.diagnostics["truncated"])

    def test_precondicionador(self):
        tau = np.array([0, 3, 3, 14])
        np.testing.assert_allclose(preconditioner(self.design, tau), np.full(4, math.sqrt(15.0 / 4.0)))

    def test_identidade_de_escala(self):
        x = RandomStream(8).generator().standard_normal(15)
        mean, exact = scaling_identity_check(self.design, x, 30, 4000, RandomStream(9))

        self.assertAlmostEqual(exact, float(np.sum(x**2)))
        self.assertAlmostEqual(mean / exact, 1.0, delta=0.05)

    def test_avaliacao_da_solucao(self):
        solution = corsing_solve(self.setup, self.problem, self.config, self.design)
        points, values = evaluate_solution(solution, 5)

        self.assertEqual(points.shape, (5,))
        self.assertAlmostEqual(abs(values[0]), 0.0)
        self.assertAlmostEqual(abs(values[-1]), 0.0)
        with self.assertRaises(ArgumentError):
            evaluate_solution(solution, np.array([]))

    def test_previsao_de_rip(self):
        prediction = corsing_rip_inputs(self.setup, self.problem, self.config, self.design)

        self.assertEqual(prediction.admissible_epsilon, (0.5, 1.0))
        self.assertAlmostEqual(prediction.bound.level, 0.25)
        self.assertAlmostEqual(prediction.c_B, 0.5)
        self.assertAlmostEqual(prediction.C_B, 1.0)


class TestDiagnostics(unittest.TestCase):
    def test_projecao_h10_da_solucao_exata(self):
        trial = sine_h10_system(8)
        coefficients, tail = h10_projection(trial, diffusion_exact_derivative(AdrProblem.from_values()))
        q = np.arange(1, 9)
        expected = np.where(q % 2 == 1, 2.0 * math.sqrt(2.0) / (q * math.pi) ** 2, 0.0)

        np.testing.assert_allclose(coefficients, expected, atol=1e-12)
        self.assertAlmostEqual(tail + float(np.sum(expected**2)), 1.0 / 12.0, places=12)

    def test_solucao_exata_so_para_difusao_pura(self):
        with self.assertRaisesRegex(ArgumentError, "difusão pura"):
            diffusion_exact_derivative(AdrProblem.from_values(beta_adv=1.0))

    def test_erro_h1_soma_a_cauda(self):
        self.assertAlmostEqual(h1_error([1.0, 0.0, 0.0], [0.0, 0.0, 0.0], sine_h10_system(3), tail_energy=3.0), 2.0)

    def test_truncamento(self):
        clipped, truncated = truncate([3.0, 4.0], 1.0)
        self.assertTrue(truncated)
        np.testing.assert_allclose(clipped, [0.6, 0.8])

        same, truncated = truncate([3.0, 4.0], 10.0)
        self.assertFalse(truncated)
        np.testing.assert_array_equal(same, [3.0, 4.0])
        with self.assertRaises(ArgumentError):
            truncate([1.0], 0.0)

    def test_intervalo_probabilidade_e_limite_de_erro(self):
        self.assertEqual(corsing_admissible_interval(1.0, 0.5), (0.5, 1.0))
        self.assertAlmostEqual(corsing_admissible_interval(4.0, 0.5)[0], 0.875)
        with self.assertRaises(ArgumentError):
            corsing_admissible_interval(1.0, 0.0)

        self.assertEqual(corsing_failure_probability(1, 1, 1.0, 0.5), 1.0)
        self.assertLess(corsing_failure_probability(10**12, 1, 1.0, 1.0), 1e-3)
        self.assertAlmostEqual(corsing_error_bound(0.0, 0.1, 2.0, 0.01), 5.14)


if __name__ == "__main__":
    unittest.main()
