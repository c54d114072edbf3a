"""JSON (de)serialization for every on-disk format.

Field elements serialize as length-k integer coefficient arrays (constant
term first).  Structure constants are sorted lexicographically by (i, j, k)
and dumps are canonical (sorted keys, fixed indentation), so identical data
always produces identical bytes.
"""

from __future__ import annotations

import hashlib
import json

from .errors import AlgebraError, HopfError, RecipeError
from .gf import FiniteField, field_from_dict, field_to_dict
from .linalg import DenseMatrix
from .algebra import AlgebraData, ModuleRep, check_algebra_axioms, check_module_axioms
from .groups import GroupTable, group_from_dict, group_to_dict
from .hopf import HopfData, check_hopf_axioms
from .meataxe import CompositionSeries


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(obj))


def read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise RecipeError(f"cannot read {path}: {exc}") from exc


def file_sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


# -- element and vector helpers --------------------------------------------------


def elt_to_json(field: FiniteField, a: int) -> list[int]:
    return field.element_coeffs(a)


def elt_from_json(field: FiniteField, coeffs) -> int:
    return field.element_from_coeffs(coeffs)


def vec_to_json(field: FiniteField, vec) -> list[list[int]]:
    return [field.element_coeffs(a) for a in vec]


def vec_from_json(field: FiniteField, data) -> list[int]:
    return [field.element_from_coeffs(c) for c in data]


def grid_to_json(field: FiniteField, rows) -> list[list[list[int]]]:
    return [vec_to_json(field, row) for row in rows]


def grid_from_json(field: FiniteField, data) -> list[list[int]]:
    return [vec_from_json(field, row) for row in data]


# -- algebra and Hopf files -------------------------------------------------------


def algebra_to_dict(algebra: AlgebraData) -> dict:
    F = algebra.field
    return {
        "field": field_to_dict(F),
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "structconst": [[i, j, k, elt_to_json(F, c)] for i, j, k, c in algebra.structconst],
        "unit": vec_to_json(F, algebra.unit),
        "name": algebra.name,
    }


def algebra_from_dict(data: dict, validate: bool = True) -> AlgebraData:
    try:
        field = field_from_dict(data["field"])
        dim = int(data["dim"])
        labels = data.get("labels")
        structconst = [
            (int(i), int(j), int(k), elt_from_json(field, c)) for i, j, k, c in data["structconst"]
        ]
        unit = vec_from_json(field, data["unit"])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise RecipeError(f"malformed algebra file: {exc}") from exc
    algebra = AlgebraData(field, dim, labels, structconst, unit, name=data.get("name", ""))
    if validate:
        check_algebra_axioms(algebra).raise_if_failed(AlgebraError)
    return algebra


def hopf_to_dict(hopf: HopfData) -> dict:
    F = hopf.field
    out = algebra_to_dict(hopf.algebra)
    out["coproduct"] = grid_to_json(F, hopf.coproduct)
    out["counit"] = vec_to_json(F, hopf.counit)
    out["antipode"] = grid_to_json(F, hopf.antipode.data)
    out["name"] = hopf.name
    if hopf.meta:
        out["metadata"] = dict(hopf.meta)
    return out


def hopf_from_dict(data: dict, validate: bool = True) -> HopfData:
    algebra = algebra_from_dict(data, validate=validate)
    F = algebra.field
    try:
        coproduct = grid_from_json(F, data["coproduct"])
        counit = vec_from_json(F, data["counit"])
        antipode = grid_from_json(F, data["antipode"])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise RecipeError(f"malformed Hopf file: {exc}") from exc
    hopf = HopfData(algebra, coproduct, counit, antipode,
                    name=data.get("name", ""), meta=data.get("metadata"))
    if validate:
        check_hopf_axioms(hopf).raise_if_failed(HopfError)
    return hopf


def load_hopf(path: str, validate: bool = True) -> HopfData:
    return hopf_from_dict(read_json(path), validate=validate)


def save_hopf(path: str, hopf: HopfData) -> None:
    write_json(path, hopf_to_dict(hopf))


def load_algebra(path: str, validate: bool = True) -> AlgebraData:
    return algebra_from_dict(read_json(path), validate=validate)


def save_algebra(path: str, algebra: AlgebraData) -> None:
    write_json(path, algebra_to_dict(algebra))


# -- modules, subspaces, series ---------------------------------------------------


def module_to_dict(module: ModuleRep) -> dict:
    F = module.algebra.field
    return {
        "dim": module.dim,
        "action": [grid_to_json(F, m.data) for m in module.action],
        "name": module.name,
    }


def module_from_dict(data: dict, algebra: AlgebraData, validate: bool = True) -> ModuleRep:
    F = algebra.field
    try:
        dim = int(data["dim"])
        action = [DenseMatrix(F, grid_from_json(F, grid), cols=dim) for grid in data["action"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise RecipeError(f"malformed module file: {exc}") from exc
    module = ModuleRep(algebra, dim, action, name=data.get("name", ""))
    if validate:
        check_module_axioms(module).raise_if_failed(AlgebraError)
    return module


def subspace_from_dict(data: dict, field: FiniteField) -> list[list[int]]:
    try:
        return [vec_from_json(field, v) for v in data["basis"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise RecipeError(f"malformed subspace file: {exc}") from exc


def subspace_to_dict(field: FiniteField, rows) -> dict:
    return {"basis": [vec_to_json(field, r) for r in rows]}


def chain_from_dict(data: dict, field: FiniteField) -> list[list[list[int]]]:
    try:
        return [[vec_from_json(field, v) for v in step] for step in data["chain"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise RecipeError(f"malformed series file: {exc}") from exc


def chain_to_dict(field: FiniteField, chain) -> dict:
    return {"chain": [[vec_to_json(field, v) for v in step] for step in chain]}


def composition_series_to_dict(series: CompositionSeries) -> dict:
    F = series.module.algebra.field
    return {
        "module_ref": series.module.name,
        "seed": series.seed,
        "factors": [
            {
                "label": label,
                "dim": rep.dim,
                "multiplicity": mult,
                "action": [grid_to_json(F, m.data) for m in rep.action],
            }
            for (rep, mult), label in zip(series.factors, series.labels)
        ],
        "witnesses": [w.to_dict() for w in series.witnesses],
    }


# -- groups and recipes -------------------------------------------------------------


def load_group(path: str) -> GroupTable:
    return group_from_dict(read_json(path))


def save_group(path: str, group: GroupTable) -> None:
    write_json(path, group_to_dict(group))
