import tempfile
import unittest
from pathlib import Path

import numpy as np

from source.numkit import MatrixFormatError, read_matrix_csv, write_matrix_csv


ROOT = Path(__file__).resolve().parents[3]
ID3_PATH = ROOT / "config/id3.csv"


class TestMatrixCsv(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)
        self.root = Path(self.tmpdir.name)

    def _write(self, name: str, text: str) -> Path:
        path = self.root / name
        path.write_text(text, encoding="utf-8")
        return path

    def test_le_fixture_identidade(self):
        np.testing.assert_array_equal(read_matrix_csv(ID3_PATH), np.eye(3))

    def test_gravacao_preserva_valores_complexos(self):
        M = np.array([[1 + 2j, -0.1], [1e-17j, np.pi]])
        path = write_matrix_csv(self.root / "m.csv", M)

        lines = path.read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[:2], ["rows,cols", "2,2"])
        np.testing.assert_array_equal(read_matrix_csv(path), M)

    def test_cabecalho_e_opcional(self):
        path = self._write("sem_cabecalho.csv", "1,2\n1,0\n0,1\n")

        np.testing.assert_array_equal(read_matrix_csv(path), [[1, 1j]])

    def test_erro_cita_a_linha(self):
        path = self._write("ruim.csv", "rows,cols\n2,1\n1,0\nabc,0\n")
        with self.assertRaisesRegex(MatrixFormatError, "Linha 4"):
            read_matrix_csv(path)

    def test_numero_de_entradas_incorreto(self):
        path = self._write("curto.csv", "rows,cols\n2,2\n1,0\n")
        with self.assertRaisesRegex(MatrixFormatError, "esperadas 4 entradas, encontradas 1"):
            read_matrix_csv(path)

    def test_campos_a_mais(self):
        path = self._write("campos.csv", "rows,cols\n1,1\n1,0,3\n")
        with self.assertRaisesRegex(MatrixFormatError, "Linha 3: esperados 2 campos"):
            read_matrix_csv(path)

    def test_arquivo_vazio_e_inexistente(self):
        with self.assertRaisesRegex(MatrixFormatError, "vazio"):
            read_matrix_csv(self._write("vazio.csv", ""))
        with self.assertRaises(FileNotFoundError):
            read_matrix_csv(self.root / "nao_existe.csv")


if __name__ == "__main__":
    unittest.main()
