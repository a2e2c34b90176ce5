import pytest

from berk import schottky as sk
from berk import serialize as se


@pytest.fixture(scope="session")
def groups():
    """name -> (Group, Figure) for every shipped fixture."""
    out = {}
    for name in se.FIXTURES:
        G = se.read_group_file(name)
        out[name[:-5]] = (G, G.figure if G.figure is not None else sk.find_figure(G.gens))
    return out
