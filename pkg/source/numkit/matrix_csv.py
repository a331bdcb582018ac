"""Leitura e escrita de matrizes complexas no formato CSV de intercâmbio.

Formato: cabeçalho ``rows,cols``, uma linha com as dimensões e, em seguida,
uma linha ``re,im`` por entrada em ordem row-major.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np
import numpy.typing as npt

from source.numkit.errors import MatrixFormatError
from source.numkit.matrices import ComplexMatrix, as_complex_matrix

HEADER = ["rows", "cols"]


def _parse_pair(row: list[str], line_number: int, cast) -> tuple:
    if len(row) != 2:
        raise MatrixFormatError(
            f"Linha {line_number}: esperados 2 campos, encontrados {len(row)}."
        )
    try:
        return cast(row[0].strip()), cast(row[1].strip())
    except ValueError as exc:
        raise MatrixFormatError(f"Linha {line_number}: valor inválido {row!r}.") from exc


def read_matrix_csv(path: str | Path) -> ComplexMatrix:
    """Lê uma matriz complexa do CSV de intercâmbio.

    Raises:
        FileNotFoundError: Se o arquivo não existir.
        MatrixFormatError: Se o conteúdo estiver malformado (a mensagem cita a linha).
    """
    arquivo = Path(path)
    with arquivo.open("r", newline="", encoding="utf-8") as fp:
        rows = [row for row in csv.reader(fp)]

    if not rows:
        raise MatrixFormatError(f"Linha 1: arquivo vazio {arquivo}.")

    cursor = 0
    if [field.strip() for field in rows[0]] == HEADER:
        cursor = 1
    if cursor >= len(rows):
        raise MatrixFormatError(f"Linha {cursor + 1}: dimensões ausentes.")
    n_rows, n_cols = _parse_pair(rows[cursor], cursor + 1, int)
    if n_rows < 1 or n_cols < 1:
        raise MatrixFormatError(f"Linha {cursor + 1}: dimensões inválidas {n_rows}x{n_cols}.")
    cursor += 1

    entries = rows[cursor:]
    while entries and not any(field.strip() for field in entries[-1]):
        entries.pop()
    expected = n_rows * n_cols
    if len(entries) != expected:
        raise MatrixFormatError(
            f"Linha {cursor + len(entries) + 1}: esperadas {expected} entradas, "
            f"encontradas {len(entries)}."
        )

    values = np.empty(expected, dtype=np.complex128)
    for offset, row in enumerate(entries):
        re, im = _parse_pair(row, cursor + offset + 1, float)
        if not (np.isfinite(re) and np.isfinite(im)):
            raise MatrixFormatError(f"Linha {cursor + offset + 1}: entrada não finita.")
        values[offset] = complex(re, im)
    return as_complex_matrix(values.reshape(n_rows, n_cols))


def write_matrix_csv(path: str | Path, M: npt.ArrayLike) -> Path:
    A = as_complex_matrix(M)
    arquivo = Path(path)
    arquivo.parent.mkdir(parents=True, exist_ok=True)
    with arquivo.open("w", newline="", encoding="utf-8") as fp:
        writer = csv.writer(fp)
        writer.writerow(HEADER)
        writer.writerow(A.shape)
        for value in A.reshape(-1):
            writer.writerow([repr(float(value.real)), repr(float(value.imag))])
    return arquivo
