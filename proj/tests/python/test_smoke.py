import json
import os
import subprocess
from fractions import Fraction

import pytest

import discoh


def test_dims_and_basis():
    assert discoh.degree_dims(4, 1) == [1, 6, 11, 6]
    assert discoh.hyperplane_count(4, 2) == 5
    b1 = discoh.basis(3, 1, 1)
    assert b1 == [((1,), (2,)), ((1,), (3,)), ((2,), (3,))]


def test_mu_matches_linearized_boundary():
    lam = [Fraction(1, 2), 3, -2]
    for q in range(2):
        mu = discoh.mu(3, 1, q, lam)
        assert mu == discoh.mu(3, 1, q, lam, closed_form=False)
        d = discoh.boundary_derivative(3, 1, q + 1, lam)
        sign = -1 if q % 2 else 1
        assert mu == [[sign * x for x in row] for row in d]


def test_betti():
    r = discoh.os_betti(3, 1, [1, 1, -2])
    assert r["betti"] == [0, 1, 1]
    assert discoh.os_betti(3, 1, [1, 1, 1])["betti"] == [0, 0, 0]
    assert discoh.local_betti(3, 1, ["2", "3", "5/7"])["betti"] == discoh.generic_betti(3, 1)


def test_cyclotomic_and_sandwich():
    r = discoh.local_betti_cyclotomic(3, 1, ["1/3", "1/3", "1/3"])
    assert r["consensus"]["agree"]
    s = discoh.sandwich(3, 1, [1, 1, -2])
    assert s["ok"]


def test_linearization_report():
    assert discoh.verify_linearization(4, 2)["ok"]
    assert discoh.resonance_membership(3, 1, 1, 1, [1, 1, -2])


def test_errors():
    with pytest.raises(ValueError):
        discoh.mu(3, 1, 0, [1, 2])
    with pytest.raises(ValueError):
        discoh.degree_dims(3, 0)


@pytest.mark.skipif("DISCOH_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_roundtrip(tmp_path):
    cli = os.environ["DISCOH_CLI"]
    out = tmp_path / "b.json"
    rc = subprocess.run([cli, "betti", "--n", "3", "--ell", "1", "--weights", "1,1,-2", "-o", str(out)])
    assert rc.returncode == 0
    assert json.loads(out.read_text())["betti"] == [0, 1, 1]
    bad = subprocess.run([cli, "betti", "--n", "3", "--ell", "1", "--weights", "1,1"], capture_output=True, text=True)
    assert bad.returncode == 2 and "N=3" in bad.stderr
