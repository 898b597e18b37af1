import json

import pytest

import qfrob.certify as certify_mod
from qfrob.certify import CERTIFIED, FAILED, certify_non_d_affine
from qfrob.errors import UnsupportedParameters
from qfrob.pushforward import SpinorMultiplicityMatrix


def test_certify_p3_m2():
    cert = certify_non_d_affine(3, 2, 4)
    assert cert.verdict == CERTIFIED
    assert cert.e0 == 3
    assert cert.failed_premise is None
    names = [pr["name"] for pr in cert.premises]
    assert names == [
        "spinor_onset_threshold",
        "pushforward_spinor_levels",
        "line_only_pushforward_at_minus_m",
        "spinor_multiplicity_matrices",
        "hom_ext_reference_table",
        "split_forcing",
    ]
    assert all(pr["status"] == "passed" for pr in cert.premises)
    assert cert.u == [[10, 1], [1, 10]]
    assert cert.v == [[10, 1], [1, 10]]


def test_certificate_json_is_deterministic():
    a = certify_non_d_affine(3, 2, 4).to_json()
    b = certify_non_d_affine(3, 2, 4).to_json()
    assert a == b
    payload = json.loads(a)
    assert payload["verdict"] == "CERTIFIED"
    assert payload["finite_range_only"] is True
    assert payload["n"] == 4


@pytest.mark.parametrize(
    "args",
    [(2, 2, 4), (3, 1, 4), (3, 2, 1), (9, 2, 4), (3, 2, 2)],
)
def test_unsupported_inputs(args):
    with pytest.raises(UnsupportedParameters):
        certify_non_d_affine(*args)


def test_failed_premise_reported(monkeypatch):
    # Feed the pipeline an asymmetric multiplicity matrix; it must fail the
    # matrix premise, name it, and stop before the forcing premise.
    def fake_matrix(level, p, m):
        return SpinorMultiplicityMatrix(level, p, m, ((3, 0), (1, 2)))

    monkeypatch.setattr(certify_mod, "spinor_multiplicity_matrix", fake_matrix)
    cert = certify_non_d_affine(3, 2, 4)
    assert cert.verdict == FAILED
    assert cert.failed_premise == "spinor_multiplicity_matrices"
    names = [pr["name"] for pr in cert.premises]
    assert "split_forcing" not in names
    statuses = {pr["name"]: pr["status"] for pr in cert.premises}
    assert statuses["spinor_multiplicity_matrices"] == "failed"
