import pytest
from mpmath import mp

from src.pipeline_components.lattice_oracle import LatticeOracle
from src.ring.eisen_ring import specialize_i
from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.exceptions import DomainError
from src.utils.numerics import eval_closed_form, eval_ring_element


def test_oracle_matches_the_value_at_i(oracle, reducer):

    report = oracle.oracle_Gtilde(IndexTuple((1, 1)), mp.mpc(0, 1))

    exact = eval_closed_form(specialize_i(reducer.reduce_depth2(1, 1)), 128)

    assert abs(report.value - exact) / exact < mp.mpf("1e-20")
    assert report.truncation == 60
    assert "m = +-1" in report.summation_order


def test_oracle_depth2_at_2i(oracle, reducer):

    tau = mp.mpc(0, 2)

    report = oracle.oracle_Gtilde(IndexTuple((1, 2)), tau)

    assert abs(report.value - eval_ring_element(reducer.reduce_depth2(1, 2), tau)) < mp.mpf("1e-10")


def test_oracle_star_family(oracle, reducer):

    tau = mp.mpc(0.5, 2)

    t = IndexTuple((1, 1, 1), Family.STAR)

    report = oracle.oracle_Gtilde(t, tau)

    assert abs(report.value - eval_ring_element(reducer.reduce_multi(t), tau)) < mp.mpf("1e-15")


def test_threads_do_not_change_the_result(configuration):

    tau = mp.mpc(0.5, 2)

    t = IndexTuple((1, 2, 1))

    single = LatticeOracle(configuration).oracle_Gtilde(t, tau)

    configuration["oracle_threads"] = 4

    threaded = LatticeOracle(configuration)

    for _ in range(20):

        report = threaded.oracle_Gtilde(t, tau)

        assert report.value == single.value
        assert report.tail_estimate == single.tail_estimate


def test_threaded_coth_rows_are_reproducible(configuration):

    tau = mp.mpc(0.5, 2)

    c = CothIndex(IndexTuple((1, 1), Family.COTH), 2)

    single = LatticeOracle(configuration).oracle_coth(c, tau)

    configuration["oracle_threads"] = 3

    threaded = LatticeOracle(configuration)

    assert all(threaded.oracle_coth(c, tau).value == single.value for _ in range(20))


def test_worker_errors_reach_the_caller(configuration):

    configuration["oracle_threads"] = 4

    def row(m, ctx):

        if m == 3:
            raise DomainError("row 3 failed")

        return ctx.mpc(1)

    with pytest.raises(DomainError, match="row 3 failed"):
        LatticeOracle(configuration)._sum_rows(row, 8)


def test_tail_estimate_shrinks_with_mmax(oracle):

    tau = mp.mpc(0, 1)

    t = IndexTuple((1, 1))

    assert oracle.oracle_Gtilde(t, tau, mmax=20).tail_estimate < oracle.oracle_Gtilde(t, tau, mmax=5).tail_estimate


def test_oracle_domain_errors(oracle):

    with pytest.raises(DomainError):
        oracle.oracle_Gtilde(IndexTuple((1, 1)), mp.mpc(0, 2), mmax=0)

    with pytest.raises(DomainError, match="Im\\(tau\\) must be positive"):
        oracle.oracle_Gtilde(IndexTuple((1, 1)), mp.mpc(1, -1))

    with pytest.raises(DomainError):
        oracle.oracle_Gtilde(IndexTuple((1, 1), Family.COTH), mp.mpc(0, 2))


def test_unknown_coth_mode(configuration):

    configuration["coth_mode"] = "sideways"

    with pytest.raises(DomainError):
        LatticeOracle(configuration)


def test_coth_power_zero_is_the_star_sum(oracle):

    tau = mp.mpc(0, 2)

    star = oracle.oracle_Gtilde(IndexTuple((1, 1), Family.STAR), tau)

    coth = oracle.oracle_coth(CothIndex(IndexTuple((1, 1), Family.COTH), 0), tau)

    assert abs(star.value - coth.value) < mp.mpf("1e-10")


@pytest.mark.parametrize("halves, k", [((1, 1), 1), ((1, 2), 1), ((1, 1), 2), ((2,), 1)])
def test_coth_oracle_matches_the_solver(oracle, solver, halves, k):

    tau = mp.mpc(0, 2)

    c = CothIndex(IndexTuple(halves, Family.COTH), k)

    report = oracle.oracle_coth(c, tau)

    symbolic = eval_ring_element(solver.coth_reduce(c), tau)

    assert abs(report.value - symbolic) / abs(symbolic) < mp.mpf("1e-6")


def test_direct_coth_summation_agrees_with_periodic(configuration):

    tau = mp.mpc(0, 2)

    c = CothIndex(IndexTuple((1, 2), Family.COTH), 1)

    periodic = LatticeOracle(configuration).oracle_coth(c, tau, mmax=10)

    configuration["coth_mode"] = "direct"
    configuration["precision_bits"] = 64

    direct = LatticeOracle(configuration).oracle_coth(c, tau, mmax=10, nmax=200)

    assert abs(direct.value - periodic.value) <= direct.tail_estimate + mp.mpf("1e-12")
    assert "summed directly" in direct.summation_order


def test_report_serialization(oracle):

    report = oracle.oracle_Gtilde(IndexTuple((2,)), mp.mpc(0, 1), mmax=10)

    row = report.as_dict(digits=10)

    assert row["truncation"] == 10
    assert set(row) == {"value_re", "value_im", "truncation", "tail_estimate", "summation_order"}


def test_direct_coth_summation_matches_the_formula(configuration, solver):

    tau = mp.mpc(0, 2)

    c = CothIndex(IndexTuple((1, 1), Family.COTH), 1)

    configuration["coth_mode"] = "direct"
    configuration["precision_bits"] = 64

    with mp.workprec(64):

        report = LatticeOracle(configuration).oracle_coth(c, tau, mmax=12, nmax=4000)

        symbolic = eval_ring_element(solver.coth_reduce(c), tau)

        assert abs(report.value - symbolic) / abs(symbolic) < mp.mpf("1e-6")


def test_oracle_matches_the_formula_at_rho(oracle, reducer):

    rho = mp.expjpi(mp.mpf(2) / 3)

    for halves in [(1, 1), (1, 1, 1), (1, 2)]:

        t = IndexTuple(halves)

        report = oracle.oracle_Gtilde(t, rho)

        symbolic = eval_ring_element(reducer.reduce_multi(t), rho)

        assert abs(report.value - symbolic) / abs(symbolic) < mp.mpf("1e-8")
