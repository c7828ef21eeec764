"""JSON matrix files: desk-scale, human-auditable, bit-exact round trips.

Schema: {"n": int, "field": "real"|"complex", "data": [...]} with data in
row-major order; complex entries are [re, im] pairs.
"""

from __future__ import annotations

import json

import numpy as np

from renyivar import errors, spectral


def _entries_from_doc(doc: dict) -> np.ndarray:
    try:
        n = doc["n"]
        field = doc["field"]
        data = doc["data"]
    except (KeyError, TypeError) as e:
        raise errors.MatrixParseError(f"missing field in matrix file: {e}") from e
    if not isinstance(n, int) or n < 1:
        raise errors.MatrixParseError(f"n must be a positive integer, got {n!r}")
    if field not in ("real", "complex"):
        raise errors.MatrixParseError(f"field must be 'real' or 'complex', got {field!r}")
    if len(data) != n * n:
        raise errors.MatrixParseError(f"expected {n * n} entries, got {len(data)}")
    out = np.empty(n * n, dtype=np.complex128)
    for i, entry in enumerate(data):
        if field == "real":
            if not isinstance(entry, (int, float)) or isinstance(entry, bool):
                raise errors.MatrixParseError(f"entry {i} is not a real number")
            out[i] = float(entry)
        else:
            if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                    or not all(isinstance(c, (int, float)) for c in entry)):
                raise errors.MatrixParseError(f"entry {i} is not an [re, im] pair")
            out[i] = complex(entry[0], entry[1])
        if not np.isfinite(out[i].real) or not np.isfinite(out[i].imag):
            raise errors.MatrixValidationError(f"entry {i} is not finite")
    return out.reshape(n, n)


def load_matrix(path: str, expect: str = "general"):
    """Load a matrix file; ``expect`` is one of general/hermitian/pd."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise errors.MatrixParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise errors.MatrixParseError(f"{path} is not valid JSON: {e}") from e
    m = _entries_from_doc(doc)
    if expect == "general":
        return m
    try:
        h = spectral.hermitian_from(m)
        if expect == "hermitian":
            return h
        if expect == "pd":
            return spectral.pd_from(h)
    except errors.RenyivarError as e:
        raise errors.MatrixValidationError(f"{path}: {e}") from e
    raise errors.MatrixParseError(f"unknown expectation {expect!r}")


def matrix_to_doc(m) -> dict:
    arr = m.mat if hasattr(m, "mat") else np.asarray(m, dtype=np.complex128)
    n = arr.shape[0]
    flat = arr.reshape(-1)
    if np.all(flat.imag == 0.0):
        return {"n": n, "field": "real", "data": [float(v.real) for v in flat]}
    return {"n": n, "field": "complex",
            "data": [[float(v.real), float(v.imag)] for v in flat]}


def save_matrix(path: str, m):
    """Canonical serialization: key-sorted JSON, shortest round-trip decimals."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_doc(m), fh, sort_keys=True)
        fh.write("\n")
