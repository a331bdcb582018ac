import copy
import json
import tempfile
import unittest
from pathlib import Path

from pydantic import ValidationError

from source.constantes.models import RipMethod, SystemKind
from source.experiment_config import (
    ConfigurationManager,
    ConfigValidationError,
    CorsingCommandConfig,
    JSONConfigurationStrategy,
    MeasurementSource,
    RipCommandConfig,
    SweepCommandConfig,
    YAMLConfigurationStrategy,
    build_experiment_config,
    carregar_problema,
    montar_problema,
    strategy_for,
    validar_problema,
)


ROOT = Path(__file__).resolve().parents[3]
SINE_PATH = ROOT / "config/diffusion_sine.json"
HAT_PATH = ROOT / "config/diffusion_hat.yaml"
RIP_PATH = ROOT / "config/rip_fourier.yaml"

BASE_PROBLEM = {
    "mu": 1.0,
    "forcing": 1.0,
    "trial": {"kind": "sine_h10", "N": 8},
    "test": {"kind": "sine_h10", "cap": 64},
    "config": {"s": 2},
}


class TestExperimentModels(unittest.TestCase):
    def test_fonte_exige_matriz_ou_par_N_m(self):
        with self.assertRaises(ValidationError):
            MeasurementSource(system=SystemKind.FOURIER, N=8)
        self.assertEqual(MeasurementSource(matrix_path="a.csv").matrix_path, "a.csv")

    def test_build_experiment_config_escolhe_o_modelo(self):
        config = build_experiment_config({"command": "rip", "source": {"N": 8, "m": 4}, "s": 2})

        self.assertIsInstance(config, RipCommandConfig)
        self.assertEqual(config.method, RipMethod.EXACT)
        self.assertEqual(config.replicas, 1)

    def test_relatorio_com_config_embutida(self):
        report = {"command": None, "rows": []}
        self.assertRaises(ConfigValidationError, build_experiment_config, report)

        embedded = {"command": "corsing", "seed": 0, "config": {"command": "corsing", "problem_path": "p.json", "s": 4}, "result": {}}
        config = build_experiment_config(embedded)
        self.assertIsInstance(config, CorsingCommandConfig)
        self.assertEqual(config.s, 4)

    def test_erros_citam_o_caminho(self):
        with self.assertRaisesRegex(ConfigValidationError, "Comando ausente ou desconhecido"):
            build_experiment_config({"command": "plot"})
        with self.assertRaisesRegex(ConfigValidationError, r"Configuração inválida em source\.m"):
            build_experiment_config({"command": "rip", "source": {"N": 8, "m": 0}, "s": 2})
        with self.assertRaisesRegex(ConfigValidationError, "seed"):
            build_experiment_config({"command": "rip", "source": {"N": 8, "m": 4}, "s": 2, "seed": -1})

    def test_sweep_exige_grade(self):
        with self.assertRaisesRegex(ValidationError, "m_values ou samples_factor"):
            SweepCommandConfig(kind="rip", N=16, s_values=[2])
        with self.assertRaisesRegex(ValidationError, "problem_path"):
            SweepCommandConfig(kind="corsing", s_values=[2])
        sweep = SweepCommandConfig(kind="recover", N=16, s_values=[2], samples_factor=2.0)
        self.assertEqual(sweep.m_values, [])


class TestConfigurationManager(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)
        self.root = Path(self.tmpdir.name)

    def test_carrega_yaml(self):
        manager = ConfigurationManager(strategy_for(str(RIP_PATH)))
        manager.load(str(RIP_PATH))

        self.assertEqual(manager.config.seed, 7)
        self.assertEqual(manager.config.source.N, 32)

    def test_carrega_relatorio_json(self):
        path = self.root / "report.json"
        path.write_text(
            json.dumps({"config": {"command": "rip", "source": {"N": 4, "m": 4}, "s": 1}, "results": []}),
            encoding="utf-8",
        )
        manager = ConfigurationManager(JSONConfigurationStrategy())
        manager.load(str(path))

        self.assertEqual(manager.config.command, "rip")

    def test_json_invalido_cita_a_linha(self):
        path = self.root / "broken.json"
        path.write_text('{\n  "command": "rip",\n  oops\n}', encoding="utf-8")
        with self.assertRaisesRegex(ConfigValidationError, "linha 3"):
            JSONConfigurationStrategy().load_configuration(str(path))

    def test_estrategia_por_extensao(self):
        self.assertIsInstance(strategy_for("a.yml"), YAMLConfigurationStrategy)
        self.assertIsInstance(strategy_for("a.json"), JSONConfigurationStrategy)

    def test_erros_do_gerenciador(self):
        with self.assertRaises(TypeError):
            ConfigurationManager("json")
        manager = ConfigurationManager(YAMLConfigurationStrategy())
        with self.assertRaisesRegex(ValueError, "not loaded"):
            manager.config
        with self.assertRaises(FileNotFoundError):
            manager.load(str(self.root / "missing.yaml"))


class TestProblemLoader(unittest.TestCase):
    def test_fixture_de_senos(self):
        definition = carregar_problema(SINE_PATH)

        self.assertEqual(definition.setup.N, 63)
        self.assertEqual(definition.setup.test_cap, 65536)
        self.assertEqual(definition.config.s, 8)
        self.assertEqual(definition.setup.alpha_infsup, 1.0)

    def test_fixture_de_chapeus_em_yaml(self):
        definition = carregar_problema(HAT_PATH)

        self.assertEqual(definition.setup.trial.kind, SystemKind.HAT_HIERARCHICAL)
        self.assertEqual(definition.setup.N, 31)

    def test_overrides_substituem_o_bloco_config(self):
        definition = carregar_problema(SINE_PATH, {"s": 4, "m": 50, "gamma": None})

        self.assertEqual(definition.config.s, 4)
        self.assertEqual(definition.config.m, 50)
        self.assertEqual(definition.config.gamma, 0.5)

    def test_s_maior_que_N(self):
        with self.assertRaisesRegex(ConfigValidationError, "excede N = 8"):
            montar_problema(BASE_PROBLEM, {"s": 9})
        problem = copy.deepcopy(BASE_PROBLEM)
        del problem["config"]
        with self.assertRaisesRegex(ConfigValidationError, "config.s é obrigatório"):
            montar_problema(problem)

    def test_schema_cita_o_campo(self):
        problem = copy.deepcopy(BASE_PROBLEM)
        problem["trial"]["kind"] = "legendre"
        with self.assertRaisesRegex(ConfigValidationError, r"trial\.kind"):
            validar_problema(problem)

    def test_regras_semanticas(self):
        hat = copy.deepcopy(BASE_PROBLEM)
        hat["trial"] = {"kind": "hat_hierarchical", "N": 8}
        with self.assertRaisesRegex(ConfigValidationError, "2\\^L − 1"):
            validar_problema(hat)

        small_cap = copy.deepcopy(BASE_PROBLEM)
        small_cap["test"]["cap"] = 8
        with self.assertRaisesRegex(ConfigValidationError, "deve exceder"):
            validar_problema(small_cap)

    def test_problema_nao_eliptico(self):
        problem = copy.deepcopy(BASE_PROBLEM)
        problem["mu"] = -1.0
        with self.assertRaisesRegex(ConfigValidationError, "Problema inválido"):
            montar_problema(problem)

    def test_arquivo_inexistente(self):
        with self.assertRaises(FileNotFoundError):
            carregar_problema(ROOT / "config/nao_existe.json")


if __name__ == "__main__":
    unittest.main()
