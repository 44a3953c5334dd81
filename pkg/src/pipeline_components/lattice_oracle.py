# -*- coding: utf-8 -*-
import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict

import mpmath
from mpmath import mp

from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.exceptions import DomainError
from src.utils.numerics import check_upper_half_plane, coth, inner_sum, inner_tail

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleReport(object):
    """
    Result of a brute-force lattice evaluation.

    Attributes
    ----------
    value : mpmath.mpc
        The numerical value of the series.
    truncation : int
        Largest |m| summed.
    tail_estimate : mpmath.mpf
        Estimated magnitude of everything beyond the truncation.
    summation_order : str
        Human-readable description of the order in which the lattice was summed.
    """

    value: mpmath.mpc
    truncation: int
    tail_estimate: mpmath.mpf
    summation_order: str

    def as_dict(self, digits: int = 30) -> Dict[str, object]:
        return {
            "value_re": mp.nstr(self.value.real, digits),
            "value_im": mp.nstr(self.value.imag, digits),
            "truncation": self.truncation,
            "tail_estimate": mp.nstr(self.tail_estimate, 5),
            "summation_order": self.summation_order,
        }


class LatticeOracle(object):
    """
    Independent numerical evaluation of the multiple Eisenstein-type series by summing the lattice directly.

    The inner sums over n_j are taken in closed form, the outer sum over m runs symmetrically in increasing |m|.
    This is exactly the order in which the conditionally convergent all-ones series are defined.

    Attributes
    ----------
    precision_bits : int
        Working precision of mpmath.
    mmax : int
        Default truncation of the outer sum.
    nmax : int
        Default truncation of the explicit inner coth sum in direct mode.
    coth_mode : str
        'periodic' uses coth((m + n tau) pi i / tau) = coth(m pi i / tau); 'direct' sums |n_r| <= nmax explicitly
        and adds the remainder in closed form.
    NUM_THREADS : int
        Number of threads sharing the rows m = 1, ..., mmax.
    """

    def __init__(self, configuration):
        """
        Parameters
        ----------
        configuration : dict
            config.yml in dict format.
        """

        self.precision_bits = configuration.get("precision_bits", 128)

        self.mmax = configuration.get("mmax", 60)

        self.nmax = configuration.get("coth_nmax", 4000)

        self.coth_mode = configuration.get("coth_mode", "periodic")

        if self.coth_mode not in ("periodic", "direct"):
            raise DomainError(f"unknown coth_mode {self.coth_mode!r}")

        self.NUM_THREADS = max(1, int(configuration.get("oracle_threads", 1)))

    def oracle_Gtilde(self, t: IndexTuple, tau, mmax: int = None) -> OracleReport:
        """
        Sum G~_{2p_1,...,2p_r}(tau) (full family) or its star part (star family) over the lattice.

        Parameters
        ----------
        t : IndexTuple
            Series to evaluate.
        tau : complex
            Point of the upper half plane.
        mmax : int, optional
            Outer truncation, defaults to the configured value.
        """

        mmax = self.mmax if mmax is None else mmax

        if mmax < 1:
            raise DomainError("mmax must be >= 1")

        if t.family is Family.COTH:
            raise DomainError("coth tuples are evaluated by oracle_coth")

        with mp.workprec(self.precision_bits):

            tau = check_upper_half_plane(tau)

            def row(m, ctx):

                product = ctx.mpc(1)

                for p in t.halves:
                    product *= inner_sum(p, m, tau, ctx)

                return product

            value, tail = self._sum_rows(row, mmax)

            if t.family is Family.FULL:

                zero_row = mp.mpc(1)

                for p in t.halves:
                    zero_row *= 2 * mp.zeta(2 * p) / tau ** (2 * p)

                value += zero_row

            value = +value

        logger.debug("Oracle %s at tau=%s: mmax=%d, tail ~ %s", t.label(), mp.nstr(tau, 8), mmax, mp.nstr(tail, 3))

        return OracleReport(value, mmax, tail, "n_j closed form (inner), then m = +-1, +-2, ... (outer)")

    def oracle_coth(self, c: CothIndex, tau, mmax: int = None, nmax: int = None) -> OracleReport:
        """
        Sum C_r^<2k>(2p_1, ..., 2p_r; tau) over the lattice; the coth power is bound to the last variable n_r.

        Parameters
        ----------
        c : CothIndex
            Series to evaluate.
        tau : complex
            Point of the upper half plane.
        mmax : int, optional
            Outer truncation.
        nmax : int, optional
            Truncation |n_r| <= nmax of the explicit part of the last inner sum (direct mode only).
        """

        mmax = self.mmax if mmax is None else mmax

        nmax = self.nmax if nmax is None else nmax

        if mmax < 1 or nmax < 1:
            raise DomainError("mmax and nmax must be >= 1")

        halves = c.base.halves

        with mp.workprec(self.precision_bits):

            tau = check_upper_half_plane(tau)

            p_last = halves[-1]

            def row(m, ctx):

                product = ctx.mpc(1)

                for p in halves[:-1]:
                    product *= inner_sum(p, m, tau, ctx)

                local_tau = ctx.mpc(tau)

                weight = coth(m * ctx.pi * 1j / local_tau, ctx) ** c.power

                if self.coth_mode == "periodic":
                    return product * weight * inner_sum(p_last, m, tau, ctx)

                last = ctx.fsum(
                    coth((m + n * local_tau) * ctx.pi * 1j / local_tau, ctx) ** c.power
                    / (m + n * local_tau) ** (2 * p_last)
                    for n in range(-nmax, nmax + 1)
                )

                # |n_r| > nmax: coth is constant along n_r, the rest is a shifted Hurwitz zeta
                last += weight * inner_tail(p_last, m, tau, nmax, ctx)

                return product * last

            value, tail = self._sum_rows(row, mmax)

            value = +value

        order = "n_j closed form, coth reduced by its period pi i" if self.coth_mode == "periodic" \
            else f"n_j closed form for j < r, |n_r| <= {nmax} summed directly plus its Hurwitz zeta tail"

        return OracleReport(value, mmax, tail, order + ", then m = +-1, +-2, ... (outer)")

    def _sum_rows(self, row: Callable[[int, object], mpmath.mpc], mmax: int):

        contributions: Dict[int, mpmath.mpc] = {}

        errors = []

        def work(threadCounter):

            # mpmath functions raise and restore the precision of their context, so no thread may share one
            ctx = mpmath.MPContext()
            ctx.prec = self.precision_bits

            try:
                for m in range(1, mmax + 1):

                    if m % self.NUM_THREADS == threadCounter:
                        contributions[m] = row(m, ctx) + row(-m, ctx)

            except Exception as error:
                errors.append(error)

        if self.NUM_THREADS == 1:

            work(0)

        else:

            # Each thread takes every NUM_THREADS-th row
            threads = [threading.Thread(target=work, args=(num,)) for num in range(self.NUM_THREADS)]

            for t in threads:
                t.start()

            for t in threads:
                t.join()

        if errors:
            raise errors[0]

        contributions = {m: mp.mpc(contributions[m]) for m in range(1, mmax + 1)}

        # Accumulate in ascending |m| regardless of which thread produced a row
        value = mp.fsum(contributions[m] for m in range(1, mmax + 1))

        tail = self._tail_estimate(contributions, mmax)

        return value, tail

    @staticmethod
    def _tail_estimate(contributions, mmax) -> mpmath.mpf:

        last = abs(contributions[mmax])

        if mmax == 1:
            return last

        previous = abs(contributions[mmax - 1])

        if previous == 0:
            return last

        ratio = last / previous

        if ratio >= 1:
            return last * mmax

        return last * ratio / (1 - ratio)
