from ._minmaxloc import *  # noqa: F401,F403
