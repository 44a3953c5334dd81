import pandas as pd
import pytest
from mpmath import mp

from src.pipeline_components.verifier import OracleVerifier
from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.exceptions import VerificationError


@pytest.fixture
def small_sweep(configuration):

    configuration.update({
        "sweep_max_weight": 6,
        "sweep_max_depth": 3,
        "sweep_taus": ["0+2i"],
        "coth_cases": [{"indices": [2, 2], "power": 2}],
    })

    return configuration


def test_compare_tuple_row(configuration, reducer):

    verifier = OracleVerifier(configuration, reducer=reducer)

    row = verifier.compare_tuple(IndexTuple((1, 1)), "0+2i")

    assert row["label"] == "G~_{2,2}"
    assert row["relative_difference"] < 1e-10
    assert row["truncation"] == 60

    assert verifier.check(row) is row


def test_compare_coth_row(configuration, reducer):

    verifier = OracleVerifier(configuration, reducer=reducer)

    row = verifier.compare_coth(CothIndex(IndexTuple((1, 2), Family.COTH), 1), mp.mpc(0, 2))

    assert row["label"] == "C_2^<2>(2,4)"
    assert row["relative_difference"] < 1e-6


def test_check_raises_above_tolerance(configuration):

    configuration["verify_tolerance"] = -1.0

    verifier = OracleVerifier(configuration)

    row = verifier.compare_tuple(IndexTuple((2,)), "0+2i")

    with pytest.raises(VerificationError) as info:
        verifier.check(row)

    assert info.value.relative_difference == row["relative_difference"]


def test_run_writes_reports(small_sweep, reducer):

    verifier = OracleVerifier(small_sweep, reducer=reducer)

    df = verifier.run()

    assert len(df) == len(verifier.dataset) + 1
    assert df["passed"].all()

    assert pd.read_csv(verifier.sweep_path).shape[0] == len(df)
    assert pd.read_csv(verifier.failures_path).empty


def test_run_reports_failures(small_sweep, reducer):

    small_sweep["mmax"] = 1

    verifier = OracleVerifier(small_sweep, reducer=reducer)

    with pytest.raises(VerificationError):
        verifier.run()

    assert not pd.read_csv(verifier.failures_path).empty


@pytest.mark.slow
def test_full_sweep(configuration, reducer):

    configuration["coth_cases"] = [{"indices": [2, 2], "power": 2}, {"indices": [2, 4], "power": 2},
                                   {"indices": [2, 2], "power": 4}]

    df = OracleVerifier(configuration, reducer=reducer).run()

    assert df["relative_difference"].max() < 1e-8
