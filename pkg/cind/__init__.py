__version__ = '0.1.0'

from .graph import *        # noqa
from .cycles import *       # noqa
from .oracle import *       # noqa
from .greedy import *       # noqa
from .bounds import *       # noqa
from .blocks import *       # noqa
from .structure import *    # noqa
from .solver import *       # noqa
from .generators import *   # noqa
from .io import *           # noqa
from .experiments import *  # noqa
from .exceptions import *   # noqa


def _get_all_imports(d):
    """
    Public names pulled in by the star imports above
    """
    # submodules land in the namespace too; they are not exported
    import types
    return [name for name, obj in d.items()
            if not name.startswith('_')
            and not isinstance(obj, types.ModuleType)]


__all__ = _get_all_imports(globals())
