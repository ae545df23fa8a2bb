"""JSON file formats for matroids and adjoint maps.

Matroid files (UTF-8 JSON), three variants:

    {"name": ..., "n": 3, "bases": [[0,1],[0,2],[1,2]]}
    {"name": ..., "n": 7, "field": {"prime": 2}, "matrix": [[...], ...]}
    {"name": ..., "n": 4, "field": "rational", "matrix": [["1","0",...], ...]}

Matrix rows are coordinates; columns are elements.  Rational entries are
"numerator/denominator" strings.  Element sets serialize as sorted integer
arrays.

Adjoint map files:

    {"source": <matroid-dict>, "target": <matroid-dict>,
     "map": [{"flat": [...], "image": [...]}, ...],
     "hyperplane_order": [[...], ...]}

The hyperplane order is repeated explicitly so files cannot drift from a
re-derivation; the loader cross-checks it against the table.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple, Union

from .adjoint import AdjointMap, derive_hyperplane_order
from .catalog import by_name
from .errors import InputError
from .linalg import PrimeField
from .matroid import Matroid
from .search import Representation
from .sets import ElementSet

Source = Union[str, Path, dict]


def canonical_json(obj) -> str:
    """Byte-deterministic serialization: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read(source: Source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object at top level")
    return data


# ---------------------------------------------------------------------------
# matroids
# ---------------------------------------------------------------------------

def matroid_to_dict(M: Matroid, name: Optional[str] = None,
                    rep: Optional[Representation] = None) -> dict:
    if rep is not None:
        if rep.field == "rational":
            field = "rational"
            matrix = [[str(Fraction(col[i])) for col in rep.columns] for i in range(rep.dim)]
        else:
            field = {"prime": int(rep.field)}
            matrix = [[int(col[i]) for col in rep.columns] for i in range(rep.dim)]
        out = {"n": M.n, "field": field, "matrix": matrix}
    else:
        out = {"n": M.n, "bases": sorted(sorted(b) for b in M.bases)}
    if name is not None:
        out["name"] = name
    return out


def load_matroid(source: Source) -> Tuple[Matroid, Optional[Representation], Optional[str]]:
    """Returns (matroid, representation-or-None, name-or-None)."""
    data = _read(source)
    name = data.get("name")
    if "n" not in data or not isinstance(data["n"], int):
        raise InputError("matroid file needs an integer 'n'")
    n = data["n"]
    if "bases" in data:
        bases = data["bases"]
        if not isinstance(bases, list):
            raise InputError("'bases' must be a list of lists")
        matroid = Matroid(n, bases, provenance={"op": "file", "name": name})
        return matroid, None, name
    if "matrix" in data:
        field_spec = data.get("field")
        if field_spec == "rational":
            field = "rational"
            parse = Fraction
        elif isinstance(field_spec, dict) and "prime" in field_spec:
            p = field_spec["prime"]
            PrimeField(p)  # validates primality
            field = p
            parse = lambda x: int(x) % p
        else:
            raise InputError("'field' must be \"rational\" or {\"prime\": p}")
        matrix = data["matrix"]
        if not isinstance(matrix, list) or not matrix:
            raise InputError("'matrix' must be a non-empty list of rows")
        rows = []
        for row in matrix:
            if not isinstance(row, list) or len(row) != n:
                raise InputError(f"each matrix row needs exactly n={n} entries")
            try:
                rows.append([parse(x) for x in row])
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise InputError(f"bad matrix entry in row {row!r}: {exc}") from exc
        columns = tuple(tuple(r[j] for r in rows) for j in range(n))
        rep = Representation(field, columns, len(rows))
        matroid = rep.matroid(provenance={"op": "file", "name": name})
        return matroid, rep, name
    raise InputError("matroid file needs either 'bases' or 'matrix'")


def save_matroid(M: Matroid, path: Union[str, Path], name: Optional[str] = None,
                 rep: Optional[Representation] = None) -> None:
    Path(path).write_text(canonical_json(matroid_to_dict(M, name, rep)), encoding="utf-8")


# ---------------------------------------------------------------------------
# adjoint maps
# ---------------------------------------------------------------------------

def adjoint_to_dict(phi: AdjointMap) -> dict:
    if phi.hyperplane_order is None:
        raise InputError("cannot serialize a map whose hyperplane restriction is not point-bijective")
    return {
        "source": matroid_to_dict(phi.source),
        "target": matroid_to_dict(phi.target),
        "map": [
            {"flat": F.sorted(), "image": img.sorted()} for F, img in phi.pairs()
        ],
        "hyperplane_order": [H.sorted() for H in phi.hyperplane_order],
    }


def _resolve_matroid(spec, role: str) -> Matroid:
    if isinstance(spec, str):
        return by_name(spec).matroid
    if isinstance(spec, dict):
        return load_matroid(spec)[0]
    raise InputError(f"adjoint file: '{role}' must be a matroid object or a catalog name")


def load_adjoint(source: Source, source_matroid: Optional[Matroid] = None,
                 target_matroid: Optional[Matroid] = None) -> AdjointMap:
    """Load a map file; explicit matroids override (and are checked against)
    any embedded ones."""
    data = _read(source)
    if "map" not in data or not isinstance(data["map"], list):
        raise InputError("adjoint file needs a 'map' list")

    def pick(key: str, override: Optional[Matroid]) -> Matroid:
        embedded = data.get(key)
        if embedded is None:
            if override is None:
                raise InputError(f"adjoint file has no '{key}' and none was supplied")
            return override
        m = _resolve_matroid(embedded, key)
        if override is not None and m != override:
            raise InputError(f"embedded '{key}' matroid disagrees with the supplied one")
        return override if override is not None else m

    M = pick("source", source_matroid)
    Mp = pick("target", target_matroid)
    table = {}
    for entry in data["map"]:
        if not isinstance(entry, dict) or "flat" not in entry or "image" not in entry:
            raise InputError("each map entry needs 'flat' and 'image' arrays")
        F = ElementSet.of(entry["flat"], M.n)
        if F in table:
            raise InputError(f"duplicate map entry for flat {F!r}")
        table[F] = ElementSet.of(entry["image"], Mp.n)
    phi = AdjointMap(M, Mp, table)
    stored = data.get("hyperplane_order")
    if stored is not None:
        as_sets = tuple(ElementSet.of(h, M.n) for h in stored)
        derived = derive_hyperplane_order(phi)
        if derived is not None and derived != as_sets:
            raise InputError("stored hyperplane_order disagrees with the map table")
        phi = AdjointMap(M, Mp, table, as_sets)
    return phi


def save_adjoint(phi: AdjointMap, path: Union[str, Path]) -> None:
    Path(path).write_text(canonical_json(adjoint_to_dict(phi)), encoding="utf-8")


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def write_catalog_fixtures(directory: Union[str, Path]) -> list:
    """Write every catalog entry as a matroid JSON file; returns the paths."""
    from .catalog import catalog

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in catalog():
        path = directory / f"{entry.name}.json"
        save_matroid(entry.matroid, path, name=entry.name, rep=entry.representation)
        paths.append(path)
    return paths
