import json

import pytest

from algebra.errors import InhomogeneousRelationError, PolynomialParseError, SpecValidationError
from database.models import RingSpec, parse_ring_spec
from database.spec_store import SpecStore, load_spec, registry

NODE = {
    "name": "node",
    "variables": [{"name": "x", "weight": 1}, {"name": "y", "weight": -1}],
    "relations": ["x*y"],
}


def _spec(**changes) -> dict:
    document = json.loads(json.dumps(NODE))
    document.update(changes)
    return document


def test_parse_node():
    ring = parse_ring_spec(NODE)
    assert ring.names == ("x", "y")
    assert ring.weights.scalar() == (1, -1)
    assert ring.format_relations() == ["x*y"]


def test_unknown_variable_in_relation():
    with pytest.raises(PolynomialParseError):
        parse_ring_spec(_spec(relations=["x*z"]))


def test_inhomogeneous_relation():
    document = _spec(variables=[{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
                     relations=["x + y^2"])
    with pytest.raises(InhomogeneousRelationError) as excinfo:
        parse_ring_spec(document)
    assert sorted(excinfo.value.degrees) == [(1,), (2,)]


@pytest.mark.parametrize("variables", [
    [{"name": "x", "weight": 1}, {"name": "x", "weight": -1}],
    [{"name": "u", "weight": 1}],
    [{"name": "P1_inv", "weight": 1}],
    [{"name": "2x", "weight": 1}],
    [{"name": "x", "weight": True}],
    [{"name": "x", "weight": 1}, {"name": "y", "weight": [1, 0]}],
    [{"name": "x"}],
    [],
])
def test_invalid_variables(variables):
    with pytest.raises(SpecValidationError):
        RingSpec.from_dict(_spec(variables=variables, relations=[]))


def test_unknown_option():
    with pytest.raises(SpecValidationError):
        RingSpec.from_dict(_spec(options={"colour": "red"}))


def test_spec_round_trip():
    spec = RingSpec.from_dict(_spec(options={"twist": -1}, description="node"))
    again = RingSpec.from_dict(spec.to_dict())
    assert again == spec
    assert not spec.is_free


def test_multigraded_weights():
    spec = RingSpec.from_dict({"name": "plane", "variables": [{"name": "a", "weight": [1, 0]},
                                                              {"name": "b", "weight": [0, 1]}]})
    assert spec.build().weights.dim == 2
    assert spec.to_dict()["variables"][1]["weight"] == [0, 1]


def test_registry_entries():
    names = [spec.name for spec in registry()]
    for expected in ("atiyah1", "atiyah2", "atiyah3", "mukai2", "node", "torus_plane"):
        assert expected in names
    assert len(names) == len(set(names))


def test_registry_specs_build():
    for spec in registry():
        ring = spec.build()
        assert ring.ngens == len(spec.variables)


def test_store_add_and_get(tmp_path):
    store = SpecStore(str(tmp_path / "store.json"))
    assert store.names() == []
    store.add_spec(RingSpec.from_dict(NODE))
    assert store.names() == ["node"]
    assert store.get("node").relations == ["x*y"]
    with pytest.raises(SpecValidationError):
        store.add_spec(RingSpec.from_dict(NODE))
    with pytest.raises(SpecValidationError):
        store.get("mukai2")


def test_store_reports(tmp_path):
    store = SpecStore(str(tmp_path / "nested" / "store.json"))
    store.add_report("wall-cross", "node", {"schema": 1})
    store.add_report("loci", "atiyah1", {"schema": 1})
    assert [r["id"] for r in store.reports()] == [1, 2]
    assert [r["command"] for r in store.reports("node")] == ["wall-cross"]


def test_load_spec_from_file(tmp_path):
    path = tmp_path / "node.json"
    path.write_text(json.dumps(NODE), encoding="utf-8")
    assert load_spec(str(path)).name == "node"


def test_load_spec_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(SpecValidationError):
        load_spec(str(path))


def test_load_spec_from_registry():
    assert load_spec("atiyah2").variables[0] == ("x1", (1,))
