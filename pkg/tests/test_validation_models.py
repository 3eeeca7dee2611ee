import pytest
from pydantic import ValidationError

from core.validation_models import InputPayload, JobSpec, parse_complex


@pytest.mark.parametrize("raw, expected", [
    ([1.5, -2], 1.5 - 2j),
    ((0, 1), 1j),
    (3, 3),
    (2.5, 2.5),
    (1 + 2j, 1 + 2j),
    ("1+2j", 1 + 2j),
    (" -3 ", -3),
    ("2j", 2j),
    ("(-1+2j)", -1 + 2j),
])
def test_parse_complex(raw, expected):
    assert parse_complex(raw) == expected


@pytest.mark.parametrize("raw", [True, [1], [1, 2, 3], ["a", 1], "x", None, float("inf"), [float("nan"), 0]])
def test_parse_complex_rejects(raw):
    with pytest.raises(ValueError):
        parse_complex(raw)


def test_defaults():
    job = JobSpec(subcommand="check", coefficients=[1, 1, 1, 1, 1, 1])
    assert job.tolerance == 1e-9
    assert job.free_parameter == 0
    assert job.output_format == "json"
    assert job.max_iterations == 200
    assert job.coefficients == [1, 1, 1, 1, 1, 1]


def test_gen_needs_model_and_params():
    with pytest.raises(ValidationError):
        JobSpec(subcommand="gen", params=[1, 2, 3, 4, 5])
    with pytest.raises(ValidationError):
        JobSpec(subcommand="gen", model=1)


def test_params_must_be_five():
    with pytest.raises(ValidationError, match="5 parameters"):
        JobSpec(subcommand="gen", model=1, params=[1, 2, 3])


def test_solve_with_params_needs_model():
    with pytest.raises(ValidationError):
        JobSpec(subcommand="solve", params=[1, 2, 3, 4, 5])
    assert JobSpec(subcommand="solve", model=2, params=[1, 2, 3, 4, 5]).model == 2


def test_solve_on_coefficients_may_omit_model():
    assert JobSpec(subcommand="solve", coefficients=[0] * 6).model is None


def test_recover_needs_model():
    with pytest.raises(ValidationError):
        JobSpec(subcommand="recover", coefficients=[0] * 6)


def test_sextic_commands_need_six_coefficients():
    with pytest.raises(ValidationError, match="6 coefficients"):
        JobSpec(subcommand="check", coefficients=[1, 2, 3])


def test_oracle_accepts_any_length():
    assert len(JobSpec(subcommand="oracle", coefficients=[1, 2]).coefficients) == 2
    with pytest.raises(ValidationError):
        JobSpec(subcommand="oracle", coefficients=[])


@pytest.mark.parametrize("field, value", [
    ("tolerance", 0),
    ("tolerance", float("nan")),
    ("seed", -1),
    ("trials", 0),
    ("max_iterations", 0),
    ("model", 3),
    ("output_format", "xml"),
])
def test_field_bounds(field, value):
    with pytest.raises(ValidationError):
        JobSpec(subcommand="check", coefficients=[0] * 6, **{field: value})


def test_unknown_fields_are_rejected():
    with pytest.raises(ValidationError):
        JobSpec(subcommand="check", coefficients=[0] * 6, colour="blue")


def test_input_payload_reads_emitted_reports():
    payload = InputPayload.model_validate({
        "schema": 1,
        "command": "gen",
        "model": 1,
        "params": {"a0": [1, 0], "a1": [2, 0], "a2": [3, 0], "b0": [4, 0], "b1": [5, 0]},
        "coefficients": [[10, 0], [14, 0], [25, 0], [19, 0], [13, 0], [6, 0]],
        "roots": [],
    })
    assert payload.schema_version == 1
    assert payload.params == [1, 2, 3, 4, 5]
    assert payload.job_fields("gen")["model"] == 1
    assert "model" not in payload.job_fields("solve")
    assert payload.job_fields("recover")["coefficients"][0] == 10


def test_input_payload_polynomial_object():
    payload = InputPayload.model_validate({"coefficients": {"degree": 2, "coefficients": [[1, 0], [0, 1]]}})
    assert payload.coefficients == [1, 1j]


def test_input_payload_missing_parameter():
    with pytest.raises(ValidationError, match="b1"):
        InputPayload.model_validate({"params": {"a0": 0, "a1": 0, "a2": 0, "b0": 0}})
