import numpy as np
import pytest

from mttp.instance import Instance, make_circular_instance
from mttp.neighborhood import canonical_schedule, initial_schedule
from mttp.rng import Rng
from mttp.schedule import Schedule

# canonical circle-method schedule for n=4, worked out by hand
CANONICAL_4 = [
    [-4, -3, +2, +4, +3, -2],
    [+3, +4, -1, -3, -4, +1],
    [-2, +1, -4, +2, -1, +4],
    [+1, -2, +3, -1, +2, -3],
]


@pytest.fixture
def circ4():
    return make_circular_instance(4)


@pytest.fixture
def canon4():
    return Schedule(CANONICAL_4)


@pytest.fixture
def zero4():
    return Instance(4, np.zeros((4, 4), dtype=int))


def random_mirrored(n, count, seed=0):
    inst = make_circular_instance(n)
    rng = Rng(seed)
    return [initial_schedule(inst, rng, burn_in=5 * n) for _ in range(count)]


def random_drr(n, count, seed=0):
    """Valid double round robins, mirrored or with the second half reshuffled."""
    out = []
    perm_rng = np.random.default_rng(seed)
    for i, s in enumerate(random_mirrored(n, count, seed)):
        if i % 2:
            m = n - 1
            opp = s.opp.copy()
            opp[:, m:] = opp[:, m:][:, perm_rng.permutation(m)]
            s = Schedule(opp)
        out.append(s)
    return out


# acceptance criteria report: one line per @pytest.mark.criterion test
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    detail = getattr(item, "criterion_detail", "")
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL"
        if rep.skipped and isinstance(rep.longrepr, tuple):
            detail = rep.longrepr[2]
        _criteria[number] = (status, title, detail)
    elif rep.failed and number not in _criteria:
        _criteria[number] = ("FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, detail = _criteria[number]
        line = f"AC{number} {status:<4} {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
