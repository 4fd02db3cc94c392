# SPDX-License-Identifier: Apache-2.0
"""Achievable rates of finite-bit ADC links with limited feedback."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, ConfigError, NumericalError  # noqa: F401
