"""Polar-coded transmission over fading AWGN channels.

Thin Python surface over the C++ core: polar encode/decode, code
construction, binary-input AWGN capacity and design-power solvers, the
truncated channel-inversion policy, per-symbol channel simulation and the
Monte Carlo sweep campaigns. Erasures are represented as ``None`` inside
soft vectors and channel observations.
"""

from ._polarfade import *  # noqa: F401,F403
from ._polarfade import __version__  # noqa: F401
