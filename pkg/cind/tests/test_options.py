import pytest

from cind import named, c_ind_exact
from cind.exceptions import BudgetExceededError
from cind.options import options, set_option, get_option


def test_options_context():
    # set, override, restore
    set_option('verify_steps', False)
    assert not get_option('verify_steps')
    with options(verify_steps=True):
        assert get_option('verify_steps')
    assert not get_option('verify_steps')
    set_option('verify_steps', True)

    # A budget set in the context reaches the solvers
    with options(node_budget=10):
        with pytest.raises(BudgetExceededError) as info:
            c_ind_exact(named('Petersen'))
    assert info.value.budget == 10
    assert c_ind_exact(named('Petersen')).value == 6

    # exceptions pass through
    with pytest.raises(ValueError):
        with options(oracle_max_n=3):
            raise ValueError()

    # and the option is restored anyway
    assert get_option('oracle_max_n') == 24

    with pytest.raises(ValueError):
        assert not get_option('time_limit')

    with pytest.raises(ValueError):
        set_option('time_limit', True)
