import pytest
from mpmath import mp

from src.pipeline_components.hyperbolic import CothSeriesSolver
from src.pipeline_components.lattice_oracle import LatticeOracle
from src.pipeline_components.reducer import MultipleEisensteinReducer
from src.utils.config_handler import DEFAULTS
from src.utils.numerics import parse_complex


@pytest.fixture
def configuration(tmp_path):

    conf = dict(DEFAULTS)

    conf["report_dir"] = str(tmp_path / "verification")

    return conf


@pytest.fixture(scope="session")
def reducer():
    return MultipleEisensteinReducer()


@pytest.fixture(scope="session")
def solver(reducer):
    return CothSeriesSolver(reducer)


@pytest.fixture
def oracle(configuration):
    return LatticeOracle(configuration)


@pytest.fixture(autouse=True)
def working_precision():

    with mp.workprec(128):
        yield


@pytest.fixture(params=["0+2i", "0.5+2i"])
def sweep_tau(request):
    return parse_complex(request.param)
