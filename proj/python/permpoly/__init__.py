from ._permpoly import *  # noqa: F401,F403
