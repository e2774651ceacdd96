import io
from importlib import resources

import pytest

from giq.errors import InputError
from giq.problem import parse_preset, parse_problem


def problem(text):
    return parse_problem(io.StringIO(text))


HEADER = "giq-version: 1\n"


def test_preset_stanza():
    spec = problem(HEADER + "preset: pn-cstar(3,2,3)\n")
    assert spec.max_degree == 12 and spec.ring.signature.names == ("xi", "rho")
    assert spec.resolved_n_h(spec.constraints[0]) == 5
    assert [c for c, _ in spec.resolved_strata()] == [10, 10]


def test_sl2_preset():
    spec = parse_preset("p1-sl2(2)")
    assert spec.ring.signature.names == ("xi1", "xi2", "xi3", "xi4", "rho2")
    assert [c.label for c in spec.constraints] == ["I=1,2", "I=1,3", "I=1,4"]
    assert spec.resolved_n_h(spec.constraints[0]) == 1
    assert [c for c, _ in spec.resolved_strata()] == [4, 6]
    assert parse_preset("p1-sl2:2").name == spec.name


def test_bad_preset():
    with pytest.raises(InputError):
        parse_preset("pn-cstar(3,2)")
    with pytest.raises(InputError):
        parse_preset("grassmannian(2,4)")


def test_missing_header():
    with pytest.raises(InputError, match="giq-version"):
        problem("preset: p1-sl2(2)\n")


def test_yaml_error_has_position():
    with pytest.raises(InputError, match=r"line \d+, column \d+"):
        problem(HEADER + "ring: [unclosed\n")


RING = HEADER + """\
ring:
  variables:
    - {name: x, degree: %d}
  relations: [%s]
max_degree: 4
"""


def test_odd_degree_rejected():
    with pytest.raises(InputError, match="even"):
        problem(RING % (3, '"x^2"'))


def test_inhomogeneous_rejected():
    with pytest.raises(InputError, match="homogeneous"):
        problem(RING % (2, '"x^2 + x"'))


def test_missing_split_rejected():
    text = RING % (2, '"x^3"') + """\
constraints:
  - label: c
    n_h: 1
    target: {variables: [{name: y, degree: 2}]}
    fiber: []
    map: {x: y}
"""
    with pytest.raises(InputError, match="fiber"):
        problem(text)


def test_underivable_n_h_rejected():
    text = RING % (2, '"x^3"') + """\
constraints:
  - label: c
    target: {variables: [{name: y, degree: 2}]}
    fiber: [y]
    map: {x: y}
"""
    with pytest.raises(InputError, match="slice"):
        problem(text)


def test_shipped_explicit_file_matches_preset():
    path = resources.files("giq") / "problems" / "pn_cstar_3_2_3.yaml"
    spec = parse_problem(str(path))
    preset = parse_preset("pn-cstar(3,2,3)")
    assert spec.resolved_strata() == preset.resolved_strata()
    assert spec.series.ambient == preset.series.ambient
    assert spec.series.tail is None
