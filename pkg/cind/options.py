"""
Options that change how cind searches and verifies
"""
#: Every option name
OPTIONS = {'node_budget', 'oracle_max_n', 'pairing_attempts',
           'verify_steps', 'max_ladder_length'}

#: Maximum number of search nodes a single branch-and-bound
#: run may visit before it gives up with
#: :class:`~cind.exceptions.BudgetExceededError`.
#:
#: Examples
#: --------
#: ::
#:
#:     from cind import named, c_ind_exact
#:     from cind.options import options
#:
#:     with options(node_budget=10):
#:         c_ind_exact(named('Petersen'))  # raises
node_budget = 10**9

#: Largest order of a graph for which experiment reports
#: compute the exact (exponential) oracle columns.
oracle_max_n = 24

#: Number of pairings drawn by
#: :func:`~cind.generators.random_cubic_connected` before
#: it reports failure.
pairing_attempts = 10000

#: If ``True``, the solver re-verifies the graph class after
#: every reduction and the induced 2-regularity of the
#: certificate after every lift.
verify_steps = True

#: Largest ladder parameter drawn by
#: :func:`~cind.generators.random_4chordal_cubic`.
max_ladder_length = 6


def get_option(name):
    """
    Current value of a cind option

    Parameters
    ----------
    name : str
        One of :data:`OPTIONS`.

    Raises
    ------
    ValueError
        If ``name`` is not an option.

    Examples
    --------
    >>> get_option('verify_steps')
    True
    >>> get_option('budget')
    Traceback (most recent call last):
        ...
    ValueError: Unknown option 'budget'
    """
    if name not in OPTIONS:
        raise ValueError("Unknown option {!r}".format(name))
    return globals()[name]


def set_option(name, value):
    """
    Change a cind option for the rest of the session

    Returns
    -------
    old : object
        The value it replaced, so that callers can restore it.
        :class:`options` does that for a block of code.
    """
    old = get_option(name)
    globals()[name] = value
    return old


class options:
    """
    Run a block of code with some options changed

    Parameters
    ----------
    kwargs : dict
        New values keyed by option name. The previous values are
        restored when the block exits, also when it raises.

    Examples
    --------
    >>> from cind.options import options, get_option
    >>> get_option('oracle_max_n')
    24
    >>> with options(oracle_max_n=12):
    ...     get_option('oracle_max_n')
    12
    >>> get_option('oracle_max_n')
    24
    """
    def __init__(self, **kwargs):
        self.changes = kwargs
        self.saved = {}

    def __enter__(self):
        for name, value in self.changes.items():
            self.saved[name] = set_option(name, value)
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        for name, value in self.saved.items():
            set_option(name, value)
        self.saved = {}


def resolve(name, value):
    """
    Return ``value`` unless it is ``None``, else the option

    Functions that take an explicit override (e.g. a node
    budget) use this to fall back to the global setting.
    """
    return get_option(name) if value is None else value
