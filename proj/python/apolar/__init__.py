try:
    from ._apolar import *  # noqa: F401,F403  (installed layout)
    from ._apolar import __doc__ as __doc__  # noqa: F401
except ImportError:
    from _apolar import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
    from _apolar import __doc__ as __doc__  # noqa: F401
