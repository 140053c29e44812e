import pytest

from vlekit.antoine import AntoineParameterSet
from vlekit.activity.nrtl import NrtlModel, NrtlParameterSet
from vlekit.api.config import demo_registry
from vlekit.core import register_component
from vlekit.vle import BinarySystem

# Demo Antoine sets, declared in bar. Same numbers as the bundled table;
# repeated here so the low-level tests do not depend on the data loader.
HEXANE_ANTOINE = dict(A=4.00266, B=1171.53, C=-48.784, t_min=286.18, t_max=342.69)
ETHANOL_ANTOINE = dict(A=5.24677, B=1598.673, C=-46.424, t_min=292.77, t_max=366.63)
BENZENE_ANTOINE = dict(A=4.01814, B=1203.835, C=-53.226, t_min=287.0, t_max=354.0)
PHENOL_ANTOINE = dict(A=4.26880, B=1523.264, C=-98.719, t_min=380.0, t_max=455.0)
ANILINE_PR_ANTOINE = dict(A=4.34580, B=1667.700, C=-93.000, t_min=390.0, t_max=500.0)


def antoine_bar(d):
    return AntoineParameterSet.from_declared(
        d["A"], d["B"], d["C"], d["t_min"], d["t_max"], "bar"
    )


@pytest.fixture(scope="session")
def hexane_antoine():
    return antoine_bar(HEXANE_ANTOINE)


@pytest.fixture(scope="session")
def ethanol_antoine():
    return antoine_bar(ETHANOL_ANTOINE)


@pytest.fixture(scope="session")
def registry():
    return demo_registry()


@pytest.fixture(scope="session")
def hexane_ethanol(registry):
    c1 = register_component("CCCCCC", registry)
    c2 = register_component("CCO", registry)
    return c1, c2


@pytest.fixture(scope="session")
def surrogate_system(hexane_antoine, ethanol_antoine):
    """Positive-deviation demo pair: hexane/ethanol style, one azeotrope."""
    model = NrtlModel(NrtlParameterSet.three_parameter(0.5, 0.8, 0.3))
    return BinarySystem(hexane_antoine, ethanol_antoine, model)


@pytest.fixture(scope="session")
def negative_deviation_system():
    """Phenol/2-propylaniline style pair, maximum-boiling azeotrope."""
    model = NrtlModel(NrtlParameterSet.three_parameter(-0.45, -0.6, 0.3))
    return BinarySystem(
        antoine_bar(PHENOL_ANTOINE), antoine_bar(ANILINE_PR_ANTOINE), model
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
