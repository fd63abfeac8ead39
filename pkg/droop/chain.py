#
# chain.py
#
# Copyright (c) 2026 droop-snr developers
#
# This file is part of droop-snr.
#
# droop-snr is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# droop-snr is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with droop-snr. If not, see <http://www.gnu.org/licenses/>.
#
"""Span-by-span power bookkeeping of a chain of power-mode amplifiers.

The power :math:`P` leaving every amplifier is split in three components,
the desired signal :math:`P_s`, the cumulated ASE :math:`P_a` and the
cumulated NLI :math:`P_n` (GAWBS-scattered power included). Each span

1. redistributes power in the fiber: every component is scaled by
   :math:`\\chi_n` and :math:`\\delta P_n = \\alpha_{NL} P^3 + \\gamma \\ell P`
   is added to the NLI, so the total is still :math:`P`;
2. attenuates by :math:`L` and amplifies by :math:`G = L^{-1} \\chi_a`, i.e.
   scales every component by :math:`\\chi_a`;
3. adds the amplifier ASE :math:`\\delta P_a = \\beta \\chi_a`, which brings
   the total back to :math:`P`.

Running the chain gives the received SNR without any closed form, which
makes :func:`run_chain` an oracle for :func:`droop.formula.snr_gdf`.

.. graphviz::

  digraph span {
    graph [label="One span.", rankdir = LR];
    "in" [label="P_s + P_a + P_n = P"];
    "fiber" [label="x chi_n, + dP_n"];
    "amp" [label="x chi_a, + beta chi_a"];
    "out" [label="P_s' + P_a' + P_n' = P"];
    "in" -> "fiber" -> "amp" -> "out";
  }

"""
from collections import namedtuple
from logging import getLogger
import math

from droop.formula import total_droop


LOGGER = getLogger(__name__)


class PowerState(namedtuple(
        "PowerState", ("span_index", "p_s_mw", "p_a_mw", "p_n_mw"))):
    """Power components at the output of an amplifier.

    Attributes:
      span_index: index k of the amplifier; 0 is the transmitter.
      p_s_mw: desired signal power, mW.
      p_a_mw: cumulated ASE power, mW.
      p_n_mw: cumulated NLI power, mW.
    """
    __slots__ = ()

    @property
    def total_mw(self):
        """Total power, equal to the launch power at every amplifier output.
        """
        return self.p_s_mw + self.p_a_mw + self.p_n_mw

    @property
    def snr(self):
        """Ratio between the desired signal and everything else.
        """
        noise = self.p_a_mw + self.p_n_mw
        if noise == 0:
            return math.inf
        return self.p_s_mw / noise


ChainResult = namedtuple("ChainResult", ("trace", "snr", "factors"))
"""Result of :func:`run_chain`.

Attributes:
  trace: list of N + 1 :class:`PowerState`, from the transmitter to the
    receiver.
  snr: received SNR.
  factors: the :class:`droop.formula.DroopFactors` of every span.
"""


def initial_state(p_mw):
    """State at the transmitter: all power is desired signal.
    """
    return PowerState(0, float(p_mw), 0., 0.)


def _advance(state, factors, d_n, d_a):
    chi_a, chi_n = factors.chi_a, factors.chi_n

    # redistribution in the fiber
    p_s = state.p_s_mw * chi_n
    p_a = state.p_a_mw * chi_n
    p_n = state.p_n_mw * chi_n + d_n

    # loss, gain and ASE
    return PowerState(
        state.span_index + 1,
        p_s * chi_a,
        p_a * chi_a + d_a,
        p_n * chi_a)


def _increments(p, params, factors):
    d_n = (params.alpha_nl_per_mw2 * p * p + params.gawbs_loss) * p
    d_a = params.beta_mw * factors.chi_a
    return d_n, d_a


def step(state, p_mw, params):
    """Propagate a state through one span.

    Args:
      state: a :class:`PowerState` whose total is p_mw.
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      the :class:`PowerState` at the output of the next amplifier.

    Raises:
      TypeError: if state is not a PowerState.
      DroopDomainError: if the power is outside the perturbative model.
    """
    if not isinstance(state, PowerState):
        raise TypeError("Type of given state isn't acceptable:", state)
    factors = total_droop(p_mw, params)
    d_n, d_a = _increments(float(p_mw), params, factors)
    return _advance(state, factors, d_n, d_a)


def run_chain(p_mw, params):
    """Propagate the launch power through every span of a chain.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      a :class:`ChainResult`.

    Raises:
      DomainError: if the power is not positive.
      DroopDomainError: if the power is outside the perturbative model.
    """
    factors = total_droop(p_mw, params)
    p = float(p_mw)
    d_n, d_a = _increments(p, params, factors)

    LOGGER.debug("running a chain of %d spans at %r mW", params.n_spans, p)
    state = initial_state(p)
    trace = [state]
    for _ in range(params.n_spans):
        state = _advance(state, factors, d_n, d_a)
        trace.append(state)

    return ChainResult(trace=trace, snr=state.snr, factors=factors)


def ase_partial_sum(p_mw, params, n_spans=None):
    """Cumulated ASE after n spans in closed form.

    .. math::

       P_a(n) = \\beta \\chi_a \\frac{1 - \\chi^n}{1 - \\chi}

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.
      n_spans: number of spans. (default: params.n_spans)

    Returns:
      the ASE power in mW.
    """
    n = params.n_spans if n_spans is None else n_spans
    f = total_droop(p_mw, params)
    d_a = params.beta_mw * f.chi_a
    if f.chi == 1:
        return n * d_a
    return d_a * (-math.expm1(n * math.log(f.chi))) / (1. - f.chi)
