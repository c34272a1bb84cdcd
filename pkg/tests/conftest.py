import pytest

from combiconfig import SearchProblem, decide


@pytest.fixture(scope="session")
def fano():
    verdict = decide(SearchProblem(7, 7, 3, 3))
    assert verdict.kind == "exists"
    return verdict.witness


@pytest.fixture(scope="session")
def mk8():
    # the smallest (d, d, 3, 3) instance after the Fano plane
    verdict = decide(SearchProblem(8, 8, 3, 3))
    assert verdict.kind == "exists"
    return verdict.witness
