"""Constructions and certification for k-ary orientable sequences."""

try:
    from ._oseq import *  # noqa: F401,F403  (installed package layout)
    from ._oseq import __doc__ as _doc
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _oseq import *  # noqa: F401,F403
    from _oseq import __doc__ as _doc

__doc__ = _doc
