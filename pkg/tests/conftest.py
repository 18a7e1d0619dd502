import pytest

from pragmaql import bundled_model


@pytest.fixture(scope="session")
def qubit():
    return bundled_model("qubit-zx")


@pytest.fixture(scope="session")
def qutrit():
    return bundled_model("qutrit-lines")


@pytest.fixture(scope="session")
def ququart():
    return bundled_model("ququart-planes")


@pytest.fixture(scope="session")
def all_models(qubit, qutrit, ququart):
    return {"qubit-zx": qubit, "qutrit-lines": qutrit, "ququart-planes": ququart}
