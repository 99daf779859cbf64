"""JSON loading and dumping for matrices, cones, and reports.

Entry encoding: a rational is the string "p/q" (or "p"), an integer is
accepted on input; a Gaussian rational is {"re": "p/q", "im": "p/q"}.
Floats are rejected so exactness is never silently lost.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .cones import Cone, PropernessReport, Ray
from .diagsim import DiagonalWitness, SignDiagonal
from .exact import Matrix, Scalar
from .semigroup import SemigroupClosure, XYFactorization
from .spectral import SpectralResult
from .structure import DecompositionReport


def _fraction_from_json(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not rational entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise ValueError(
            "floating point entries are not accepted; write 'p/q' strings")
    raise ValueError(f"cannot read {x!r} as a rational")


def scalar_from_json(x: Any) -> Scalar:
    if isinstance(x, dict):
        unknown = set(x) - {"re", "im"}
        if unknown:
            raise ValueError(f"unknown scalar fields {sorted(unknown)}")
        return Scalar(_fraction_from_json(x.get("re", 0)),
                      _fraction_from_json(x.get("im", 0)))
    return Scalar(_fraction_from_json(x))


def scalar_to_json(s: Scalar) -> Any:
    if s.im == 0:
        return str(s.re)
    return {"re": str(s.re), "im": str(s.im)}


def matrix_from_json(obj: dict) -> Matrix:
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        entries = obj["entries"]
    except (TypeError, KeyError) as e:
        raise ValueError("matrix object needs rows, cols, entries") from e
    if len(entries) != rows:
        raise ValueError("entry row count does not match 'rows'")
    flat = []
    for r in entries:
        if len(r) != cols:
            raise ValueError("entry column count does not match 'cols'")
        flat.extend(scalar_from_json(x) for x in r)
    return Matrix(rows, cols, flat)


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[scalar_to_json(e) for e in m.row(i)]
                    for i in range(m.rows)],
    }


def generators_from_json(obj: dict) -> list[Matrix]:
    try:
        mats = obj["matrices"]
    except (TypeError, KeyError) as e:
        raise ValueError("generator object needs a 'matrices' list") from e
    return [matrix_from_json(m) for m in mats]


def cone_from_json(obj: dict) -> Cone:
    try:
        dim = obj["dim"]
        rays = obj["rays"]
    except (TypeError, KeyError) as e:
        raise ValueError("cone object needs dim and rays") from e
    return Cone.of(dim, [[_fraction_from_json(x) for x in r] for r in rays])


def cone_to_json(k: Cone) -> dict:
    return {"dim": k.dim, "rays": [[str(x) for x in r.v] for r in k.rays]}


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [str(x) for x in v]


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_matrix(path: str) -> Matrix:
    return matrix_from_json(load_json(path))


def load_generators(path: str) -> list[Matrix]:
    obj = load_json(path)
    if isinstance(obj, dict) and "matrices" in obj:
        return generators_from_json(obj)
    # a bare matrix object is accepted as a singleton collection
    return [matrix_from_json(obj)]


def load_cone(path: str) -> Cone:
    return cone_from_json(load_json(path))


def witness_to_json(w: DiagonalWitness) -> dict:
    return {"diagonal": [scalar_to_json(x) for x in w.d]}


def sign_diagonal_to_json(s: SignDiagonal) -> dict:
    return {"signs": list(s.signs)}


def decomposition_to_json(rep: DecompositionReport) -> dict:
    return {
        "kind": rep.kind.value,
        "scc_count": rep.scc_count,
        "sccs": [list(c) for c in rep.sccs],
        "permutation": list(rep.permutation),
    }


def properness_to_json(rep: PropernessReport) -> dict:
    return {
        "is_pointed": rep.is_pointed,
        "is_solid": rep.is_solid,
        "is_proper": rep.is_proper,
    }


def spectral_to_json(res: SpectralResult) -> dict:
    return {
        "rho": res.rho,
        "right_vector": list(res.right_vector),
        "left_vector": list(res.left_vector),
        "residual": res.residual,
        "iterations": res.iterations,
    }


def closure_to_json(c: SemigroupClosure, include_matrices: bool = True) -> dict:
    elements = []
    for e in c.elements:
        item: dict[str, Any] = {"word": list(e.word)}
        if include_matrices:
            item["matrix"] = matrix_to_json(e.canonical)
        elements.append(item)
    return {
        "count": len(c.elements),
        "truncated": c.truncated,
        "caps": {
            "max_elements": c.caps.max_elements,
            "max_word_length": c.caps.max_word_length,
        },
        "elements": elements,
    }


def xy_to_json(f: XYFactorization) -> dict:
    return {
        "x_vectors": [[scalar_to_json(e) for e in v] for v in f.x_vectors],
        "y_vectors": [[scalar_to_json(e) for e in v] for v in f.y_vectors],
        "pairing": [list(p) for p in f.pairing],
        "x_spans": f.x_spans,
        "y_spans": f.y_spans,
    }


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
