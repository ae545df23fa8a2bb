import json
from pathlib import Path

import pytest

from matadj import (
    ElementSet,
    InputError,
    by_name,
    load_adjoint,
    load_matroid,
    save_adjoint,
    save_matroid,
    uniform,
)
from matadj.files import adjoint_to_dict, canonical_json, matroid_to_dict


def es(members, n):
    return ElementSet.of(members, n)


def test_bases_round_trip(tmp_path):
    M = by_name("M_K4").matroid
    path = tmp_path / "m.json"
    save_matroid(M, path, name="wheel3")
    loaded, rep, name = load_matroid(path)
    assert loaded == M
    assert rep is None
    assert name == "wheel3"
    # a second save of the loaded matroid is byte-identical
    again = tmp_path / "m2.json"
    save_matroid(loaded, again, name="wheel3")
    assert path.read_bytes() == again.read_bytes()


def test_prime_field_matrix_file():
    fixture = Path(__file__).resolve().parent.parent / "fixtures" / "fano.json"
    M, rep, name = load_matroid(fixture)
    assert name == "fano"
    assert rep is not None and rep.field == 2
    assert M == by_name("fano").matroid


def test_rational_matrix_file(tmp_path):
    data = {
        "n": 3,
        "field": "rational",
        "matrix": [["1", "0", "1/2"], ["0", "1", "1/3"]],
    }
    path = tmp_path / "q.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    M, rep, _ = load_matroid(path)
    assert M == uniform(2, 3)
    assert rep.field == "rational"


def test_matrix_save_round_trip(tmp_path):
    entry = by_name("nonfano")
    path = tmp_path / "nf.json"
    save_matroid(entry.matroid, path, name="nonfano", rep=entry.representation)
    M, rep, name = load_matroid(path)
    assert M == entry.matroid
    assert rep.field == "rational"


def test_loader_reports_exchange_failure():
    with pytest.raises(InputError, match="basis exchange fails"):
        load_matroid({"n": 4, "bases": [[0, 1], [2, 3]]})


@pytest.mark.parametrize(
    "data,message",
    [
        ({"bases": [[0]]}, "integer 'n'"),
        ({"n": 3}, "either 'bases' or 'matrix'"),
        ({"n": 3, "field": {"prime": 4}, "matrix": [[1, 0, 0]]}, "prime"),
        ({"n": 3, "field": "real", "matrix": [[1, 0, 0]]}, "'field'"),
        ({"n": 3, "field": {"prime": 2}, "matrix": [[1, 0]]}, "exactly n=3"),
        ({"n": 3, "field": "rational", "matrix": [["x", "0", "0"]]}, "bad matrix entry"),
    ],
)
def test_bad_matroid_files(data, message):
    with pytest.raises(InputError, match=message):
        load_matroid(data)


def test_unreadable_and_malformed_files(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        load_matroid(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(InputError, match="not valid JSON"):
        load_matroid(bad)
    arr = tmp_path / "arr.json"
    arr.write_text("[1,2]", encoding="utf-8")
    with pytest.raises(InputError, match="object at top level"):
        load_matroid(arr)


def test_adjoint_round_trip(tmp_path, fixture_maps):
    phi = fixture_maps["U_3_4"]
    path = tmp_path / "map.json"
    save_adjoint(phi, path)
    loaded = load_adjoint(path)
    assert loaded.source == phi.source
    assert loaded.target == phi.target
    assert loaded.table == phi.table
    assert loaded.hyperplane_order == phi.hyperplane_order
    again = tmp_path / "map2.json"
    save_adjoint(loaded, again)
    assert path.read_bytes() == again.read_bytes()


def test_adjoint_override_consistency(tmp_path, fixture_maps):
    phi = fixture_maps["U_2_3"]
    path = tmp_path / "map.json"
    save_adjoint(phi, path)
    load_adjoint(path, source_matroid=phi.source)  # agreeing override is fine
    with pytest.raises(InputError, match="disagrees"):
        load_adjoint(path, source_matroid=uniform(2, 4))


def test_stored_hyperplane_order_cross_checked(tmp_path, fixture_maps):
    phi = fixture_maps["U_2_3"]
    data = adjoint_to_dict(phi)
    data["hyperplane_order"] = list(reversed(data["hyperplane_order"]))
    with pytest.raises(InputError, match="hyperplane_order disagrees"):
        load_adjoint(data)


def test_duplicate_map_entry_rejected(fixture_maps):
    data = adjoint_to_dict(fixture_maps["U_2_3"])
    data["map"].append(dict(data["map"][0]))
    with pytest.raises(InputError, match="duplicate"):
        load_adjoint(data)


def test_map_without_embedded_matroids(fixture_maps):
    phi = fixture_maps["U_2_3"]
    data = adjoint_to_dict(phi)
    del data["source"], data["target"]
    with pytest.raises(InputError, match="none was supplied"):
        load_adjoint(data)
    loaded = load_adjoint(data, source_matroid=phi.source, target_matroid=phi.target)
    assert loaded.table == phi.table


def test_canonical_json_is_stable():
    a = canonical_json({"b": 1, "a": [2, 3]})
    assert a == '{"a":[2,3],"b":1}\n'
    assert canonical_json(matroid_to_dict(uniform(1, 1))) == '{"bases":[[0]],"n":1}\n'
