import json
import tempfile
import unittest
from pathlib import Path

import numpy as np

from source import __version__
from source.run_logging import ExperimentLogger, run_step_logger


class TestExperimentLogger(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)
        self.log_path = Path(self.tmpdir.name) / "logs" / "run.jsonl"

    def test_grava_sessao_e_replicas_em_ordem(self):
        run_logger = ExperimentLogger("rip", seed=7, log_path=str(self.log_path))
        run_logger.start_replica(1, {"seed": 7, "stream_id": 1})
        run_logger.start_replica(0, {"seed": 7, "stream_id": 0})
        run_logger.log(1, "INFO", "um", {"value": np.float64(0.5)})
        run_logger.log(0, "INFO", "zero")

        written = run_logger.write()
        lines = [json.loads(line) for line in self.log_path.read_text(encoding="utf-8").splitlines()]

        self.assertEqual(written, str(self.log_path))
        self.assertEqual(lines[0]["session"]["command"], "rip")
        self.assertEqual(lines[0]["session"]["version"], __version__)
        self.assertIn("end_time", lines[0]["session"])
        messages = [line["message"] for line in lines[1:]]
        self.assertEqual(messages, ["Starting replica 0", "zero", "Starting replica 1", "um"])
        self.assertEqual(lines[-1]["data"], {"value": 0.5})

    def test_dados_nao_serializaveis_sao_resumidos(self):
        run_logger = ExperimentLogger("recover", seed=0)
        run_logger.start_replica(0, {"seed": 0, "stream_id": 0})
        run_logger.log(0, "DEBUG", "dados", {"A": np.zeros((2, 3)), "z": 1 + 2j, "obj": object()})

        data = run_logger.entries(0)[-1]["data"]
        self.assertEqual(data["A"], {"shape": [2, 3], "dtype": "float64"})
        self.assertEqual(data["z"], [1.0, 2.0])
        self.assertEqual(data["obj"], "<Non-serializable object>")

    def test_replica_nao_iniciada_e_ignorada(self):
        run_logger = ExperimentLogger("rip", seed=0)
        run_logger.log(3, "INFO", "perdida")

        self.assertEqual(run_logger.entries(3), [])
        self.assertIsNone(run_logger.write())

    def test_registro_de_erro(self):
        run_logger = ExperimentLogger("cover", seed=0)
        run_logger.start_replica(0, {"seed": 0, "stream_id": 0})
        run_logger.log_error(0, ValueError("falhou"))

        entry = run_logger.entries(0)[-1]
        self.assertEqual(entry["level"], "ERROR")
        self.assertEqual(entry["data"]["error_message"], "falhou")


class TestRunStepLogger(unittest.TestCase):
    def test_registra_inicio_e_duracao(self):
        run_logger = ExperimentLogger("rip", seed=0)
        run_logger.start_replica(0, {"seed": 0, "stream_id": 0})
        with run_step_logger(run_logger, 0, "rip", {"s": 2}) as timing:
            pass

        entries = run_logger.entries(0)
        self.assertEqual(entries[1]["data"], {"step": "rip", "params": {"s": 2}})
        self.assertEqual(entries[2]["data"]["duration_ms"], timing.duration_ms)
        self.assertGreaterEqual(timing.duration_ms, 0.0)

    def test_sem_logger_ainda_mede(self):
        with self.assertRaises(RuntimeError):
            with run_step_logger(None, 0, "falha", {}) as timing:
                raise RuntimeError("x")
        self.assertGreaterEqual(timing.duration_ms, 0.0)


if __name__ == "__main__":
    unittest.main()
