"""Fair-ranking exposure simulator.

Simulates ranking policies over repeated impressions of a query under a
cascade browsing model, tracks the attention and relevance accumulated by
each item, and measures how much extra attention an item earns when
duplicated.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
