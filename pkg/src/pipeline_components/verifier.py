# -*- coding: utf-8 -*-
import logging
from pathlib import Path

import pandas as pd
from mpmath import mp

from src.dataset.dataset import IndexTupleDataset
from src.pipeline_components.hyperbolic import CothSeriesSolver
from src.pipeline_components.lattice_oracle import LatticeOracle
from src.pipeline_components.reducer import MultipleEisensteinReducer
from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.exceptions import VerificationError
from src.utils.numerics import eval_ring_element, parse_complex, relative_difference

logger = logging.getLogger(__name__)


class OracleVerifier(object):
    """
    Compares every symbolic closed form with its brute-force lattice sum.

    Attributes
    ----------
    precision_bits : int
        Working precision of both evaluations.
    q_terms : int
        Number of q-series terms for G_2, G_4, G_6.
    verify_tolerance : float
        Threshold of a single comparison (:meth:`check`).
    sweep_tolerance : float
        Threshold of every sweep point (:meth:`run`).
    dataset : src.dataset.dataset.IndexTupleDataset
        All index tuples covered by the sweep.
    sweep_taus : list
        Complex literals of the sweep points.
    coth_cases : list
        Coth-weighted series checked in addition, as {indices, power} dicts.
    sweep_path : Path
        CSV with one row per evaluated point.
    failures_path : Path
        CSV with the points above tolerance.
    """

    def __init__(self, configuration, reducer=None, solver=None, oracle=None):
        """
        Parameters
        ----------
        configuration : dict
            config.yml in dict format.
        reducer : MultipleEisensteinReducer, optional
        solver : CothSeriesSolver, optional
        oracle : LatticeOracle, optional
        """

        # ------ Load verification configuration ------
        self.precision_bits = configuration.get("precision_bits", 128)

        self.q_terms = configuration.get("q_terms", 64)

        self.verify_tolerance = configuration.get("verify_tolerance", 1e-6)

        self.sweep_tolerance = configuration.get("sweep_tolerance", 1e-8)

        self.sweep_taus = configuration.get("sweep_taus", ["0+2i", "0.5+2i"])

        self.coth_cases = configuration.get("coth_cases", [])

        self.dataset = IndexTupleDataset(configuration.get("sweep_max_weight", 12),
                                         configuration.get("sweep_max_depth", 4))

        # ------ Specify required output directories ------
        report_dir = Path(configuration.get("report_dir", "logs/verification"))

        self.sweep_path = report_dir / "oracle_sweep.csv"

        self.failures_path = report_dir / "oracle_failures.csv"

        # ------ Pipeline components ------
        self.reducer = reducer if reducer is not None else MultipleEisensteinReducer()

        self.solver = solver if solver is not None else CothSeriesSolver(self.reducer)

        self.oracle = oracle if oracle is not None else LatticeOracle(configuration)

    def compare_tuple(self, t: IndexTuple, tau) -> dict:
        """
        Evaluate reduce_multi(t) and the lattice sum of t at tau.

        Returns
        -------
        dict
            One report row: label, tau, both values, absolute and relative difference, tail estimate.
        """

        with mp.workprec(self.precision_bits):

            tau = parse_complex(tau) if isinstance(tau, str) else mp.mpc(tau)

            symbolic = eval_ring_element(self.reducer.reduce_multi(t), tau, self.q_terms)

            report = self.oracle.oracle_Gtilde(t, tau)

            return self.__row(t.label(), tau, symbolic, report)

    def compare_coth(self, c: CothIndex, tau) -> dict:

        with mp.workprec(self.precision_bits):

            tau = parse_complex(tau) if isinstance(tau, str) else mp.mpc(tau)

            symbolic = eval_ring_element(self.solver.coth_reduce(c), tau, self.q_terms)

            report = self.oracle.oracle_coth(c, tau)

            return self.__row(c.label(), tau, symbolic, report)

    def check(self, row: dict) -> dict:
        """
        Raise VerificationError when a comparison row exceeds verify_tolerance.
        """

        if row["relative_difference"] > self.verify_tolerance:
            raise VerificationError(f"{row['label']} at tau={row['tau']}: relative difference "
                                    f"{row['relative_difference']:.3e} exceeds {self.verify_tolerance:.1e}",
                                    row["relative_difference"])

        return row

    def run(self) -> pd.DataFrame:
        """
        Sweep every index tuple of the dataset and every coth case over all sweep points.

        Both reports are rewritten on each run.

        Returns
        -------
        pandas.DataFrame
            One row per evaluated point with a boolean column "passed".

        Raises
        ------
        VerificationError
            When at least one point exceeds sweep_tolerance.
        """

        rows = []

        logger.info("Dataset Size: %d index tuples, %d points", len(self.dataset), len(self.sweep_taus))

        for tau in self.sweep_taus:

            for idx in range(len(self.dataset)):
                rows.append(self.compare_tuple(self.dataset[idx], tau))

            for case in self.coth_cases:
                c = CothIndex(IndexTuple.from_exponents(case["indices"], Family.COTH), int(case["power"]) // 2)
                rows.append(self.compare_coth(c, tau))

            logger.info("Finished tau=%s, %d comparisons so far", tau, len(rows))

        df = pd.DataFrame(rows)

        df["passed"] = df["relative_difference"] <= self.sweep_tolerance

        failures = df[~df["passed"]]

        self.sweep_path.parent.mkdir(parents=True, exist_ok=True)

        df.to_csv(self.sweep_path, index=False)

        failures.to_csv(self.failures_path, index=False)

        logger.info("Reports written to %s and %s", self.sweep_path, self.failures_path)

        if len(failures):
            worst = failures["relative_difference"].max()
            raise VerificationError(f"{len(failures)} of {len(df)} points exceed {self.sweep_tolerance:.1e}", worst)

        return df

    @staticmethod
    def __row(label, tau, symbolic, report) -> dict:

        difference = abs(symbolic - report.value)

        return {
            "label": label,
            "tau": mp.nstr(tau, 10),
            "symbolic": mp.nstr(symbolic, 25),
            "oracle": mp.nstr(report.value, 25),
            "absolute_difference": float(difference),
            "relative_difference": float(relative_difference(report.value, symbolic)),
            "tail_estimate": float(report.tail_estimate),
            "truncation": report.truncation,
        }
