import os
from fractions import Fraction

import orjson
import pytest

from models.model import ComplexModel, ConfigurationModel, PolytopeModel
from utils.complex_core import link
from utils.errors import InputError
from utils.homology import Field
from utils.serialization import (
    complex_to_model,
    dump_json,
    field_of,
    load_any,
    parse_json,
    to_complex,
    to_configuration,
    validate_model,
)


def test_malformed_json_reports_the_line():
    with pytest.raises(InputError, match="line 2"):
        parse_json('{"m": 3,\n "maximal_faces": [[0, 1]', "broken.json")


@pytest.mark.parametrize(
    "name, model",
    [("square.json", PolytopeModel), ("pentagon_rays.json", ConfigurationModel), ("four_cycle.json", ComplexModel)],
)
def test_load_any_tells_files_apart(corpus_dir, name, model):
    assert isinstance(load_any(os.path.join(corpus_dir, name)), model)


def test_load_any_refuses_arrays(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    with pytest.raises(InputError):
        load_any(path)


def test_validation_errors_become_input_errors():
    with pytest.raises(InputError):
        validate_model({"m": 3}, ComplexModel, "inline")
    with pytest.raises(InputError):
        validate_model({"dim": 2, "points": [[0.5, 1]]}, ConfigurationModel, "inline")


def test_complex_round_trip_keeps_nonfaces(four_cycle):
    model = complex_to_model(four_cycle, nonfaces=True)
    assert model.minimal_nonfaces == [[0, 2], [1, 3]]
    assert to_complex(model) == four_cycle


def test_link_is_written_on_local_positions(four_cycle):
    assert complex_to_model(link(four_cycle, [0])).maximal_faces == [[0], [2]]


def test_rational_points():
    x = to_configuration(ConfigurationModel(dim=1, points=[["1/2"], [-3]]))
    assert x.points == ((Fraction(1, 2),), (-3,))


def test_dump_json_drops_none():
    data = orjson.loads(dump_json(ComplexModel(m=2, maximal_faces=[[0, 1]])))
    assert data == {"m": 2, "maximal_faces": [[0, 1]]}
    data = orjson.loads(dump_json([ComplexModel(m=1, maximal_faces=[[0]])], exclude_none=False))
    assert data == [{"m": 1, "maximal_faces": [[0]], "minimal_nonfaces": None}]


def test_field_of():
    assert field_of(None, "q") is Field.Q
    assert field_of("gf2", "q") is Field.GF2
    with pytest.raises(InputError):
        field_of("z3", "gf2")
