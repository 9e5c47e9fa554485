import csv
import io
import math
import os
import subprocess

import numpy as np
import pytest

import vqr


def test_werner_trace_plateau():
    z = vqr.spin_observable(0.0, 0.0)
    low = vqr.realism(vqr.werner(0.2), z, "tr")
    assert low["delta_i"] == pytest.approx(0.0, abs=1e-12)
    assert not low["vqr_detected"]
    high = vqr.realism(vqr.werner(1.0), z, "tr")
    assert high["delta_i"] == pytest.approx(0.5)
    assert high["r_max"] == pytest.approx(0.5)


def test_rmax_pins():
    assert vqr.realism_max("hs", 2) == pytest.approx(0.25)
    assert vqr.realism_max("bu", 2) == pytest.approx(math.sqrt(2) - 1)
    assert vqr.realism_max("vn", 5) == pytest.approx(math.log(5))


def test_numpy_round_trip_and_distances():
    rho = np.diag([0.7, 0.3]).astype(complex)
    sigma = np.eye(2, dtype=complex) / 2
    assert vqr.trace_distance(rho, sigma) == pytest.approx(0.4)
    assert vqr.fidelity(rho, rho) == pytest.approx(1.0)
    state = vqr.DensityMatrix(rho)
    assert np.allclose(state.matrix, rho)
    assert state.dims == [2]


def test_closed_form_matches_dilation():
    rho = vqr.DensityMatrix(vqr.random_density(4, 3, 5).matrix, [2, 2])
    a = vqr.spin_observable(0.4, 1.2)
    for kind in ["tr", "hs", "lp3", "bu", "he", "vn"]:
        closed = vqr.delta_information(rho, a, kind)
        full = vqr.delta_information(rho, a, kind, full_space=True)
        assert closed == pytest.approx(full, abs=1e-9)


def test_errors_carry_codes():
    with pytest.raises(vqr.VqrError) as info:
        vqr.DensityMatrix(np.eye(2, dtype=complex))
    assert info.value.code == "TraceNotOne"
    with pytest.raises(vqr.VqrError):
        vqr.realism_max("kl", 2)


def test_sweep_csv_is_deterministic():
    a = vqr.werner_sweep_csv(5, "tr,vn")
    assert a == vqr.werner_sweep_csv(5, "tr,vn")
    rows = list(csv.DictReader(io.StringIO(a)))
    assert len(rows) == 10
    assert len({r["spec_hash"] for r in rows}) == 1


def test_verify_rows():
    result = vqr.verify(trials=10)
    names = {r["identity"] for r in result["rows"]}
    assert "hs_pythagoras" in names
    assert all(r["trials"] == 10 for r in result["rows"])


@pytest.mark.skipif("VQR_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_rmax_csv():
    out = subprocess.run([os.environ["VQR_CLI"], "rmax", "--dmax", "3", "--kinds", "tr"],
                         check=True, capture_output=True, text=True).stdout
    lines = out.strip().split("\n")
    assert lines[0] == "spec_hash,d_e,kind,r_max"
    assert lines[1].endswith(",2,tr,0.5")
