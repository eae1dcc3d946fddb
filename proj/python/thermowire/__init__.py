from ._thermowire import *  # noqa: F401,F403
from ._thermowire import __doc__  # noqa: F401
