from ._dspec import *  # noqa: F401,F403
