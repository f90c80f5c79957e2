from ._char2lift import *  # noqa: F401,F403
from ._char2lift import __version__  # noqa: F401
