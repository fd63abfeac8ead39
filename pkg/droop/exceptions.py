#
# exceptions.py
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
"""Exceptions raised by droop-snr.

The hierarchy is

- :class:`DroopError`

  - :class:`ConfigError`
  - :class:`DomainError`

    - :class:`DroopDomainError`
    - :class:`NoFiniteOptimumError`

  - :class:`ConvergenceError`

:class:`ConfigError` and :class:`DomainError` are also :class:`ValueError`,
and :class:`ConvergenceError` is also an :class:`ArithmeticError`, so callers
which only know the builtin exceptions still catch them.
"""


class DroopError(Exception):
    """Base class of every error raised by this package.
    """


class ConfigError(DroopError, ValueError):
    """A link configuration is malformed or violates its invariants.

    Args:
      message: description of the problem.
      key: name of the offending configuration key, if any.

    Attributes:
      key: name of the offending configuration key or None.
    """

    def __init__(self, message, key=None):
        super(ConfigError, self).__init__(message)
        self.key = key


class DomainError(DroopError, ValueError):
    """An argument lies outside the domain of a model quantity.
    """


class DroopDomainError(DomainError):
    """The redistribution droop is outside the perturbative model.

    Raised when :math:`\\alpha_{NL} P^2 + \\gamma \\ell \\geq 1`, i.e. the
    fiber would redistribute all of the launch power in a single span.

    Args:
      power_mw: launch power in mW.
      redistribution: :math:`\\alpha_{NL} P^2 + \\gamma \\ell`.

    Attributes:
      power_mw: launch power in mW.
      redistribution: fraction of the power redistributed per span.
    """

    def __init__(self, power_mw, redistribution):
        super(DroopDomainError, self).__init__(
            "redistributed power fraction {0:.6g} >= 1 at P = {1:.6g} mW: "
            "outside the perturbative model".format(redistribution, power_mw))
        self.power_mw = power_mw
        self.redistribution = redistribution


class NoFiniteOptimumError(DomainError):
    """The SNR is monotone in the launch power and has no finite optimum.
    """


class ConvergenceError(DroopError, ArithmeticError):
    """An iterative solver failed to converge.

    Args:
      message: description of the failure.
      last_iterate: the last iterate of the solver.
      residual: residual of the optimality condition at the last iterate.

    Attributes:
      last_iterate: the last iterate of the solver.
      residual: residual of the optimality condition at the last iterate.
    """

    def __init__(self, message, last_iterate, residual):
        super(ConvergenceError, self).__init__(
            "{0} (last iterate {1!r}, residual {2!r})".format(
                message, last_iterate, residual))
        self.last_iterate = last_iterate
        self.residual = residual
