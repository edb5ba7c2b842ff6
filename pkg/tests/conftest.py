import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jordancoh.bimodule import regular_bimodule
from jordancoh.cohomology import cocycle_from_document
from jordancoh.superalgebra import builtin_Dt


def cocycle_doc(parity, entries):
    return {"parity": parity,
            "entries": [{"left": l, "right": r, "value": v} for l, r, v in entries]}


# Hand-written cocycles of D_t with coefficients in Reg D_t: two odd ones
# (h1, h2) and six even ones (h1..h6) spanning Z^2_0.
ODD_REPS = {
    "h1": [("e1", "x", {"~e1": "1", "~e2": "-1"}), ("e2", "x", {"~e1": "-1", "~e2": "1"}),
           ("x", "y", {"~y": "2"})],
    "h2": [("e1", "y", {"~e1": "1", "~e2": "-1"}), ("e2", "y", {"~e1": "-1", "~e2": "1"}),
           ("x", "y", {"~x": "-2"})],
}
EVEN_REPS = {
    "h1": [("e1", "e1", {"~e1": "1"}), ("e1", "x", {"~x": "1/2"}), ("e1", "y", {"~y": "1/2"})],
    "h2": [("e1", "e1", {"~e2": "1"}), ("e1", "e2", {"~e2": "-1"}), ("e1", "x", {"~x": "-1/2"}),
           ("e1", "y", {"~y": "-1/2"})],
    "h3": [("e2", "e2", {"~e1": "1"}), ("e1", "e2", {"~e1": "-1"}), ("e2", "x", {"~x": "-1/2"}),
           ("e2", "y", {"~y": "-1/2"})],
    "h4": [("e2", "e2", {"~e2": "1"}), ("e2", "x", {"~x": "1/2"}), ("e2", "y", {"~y": "1/2"})],
    "h5": [("x", "y", {"~e1": "1"})],
    "h6": [("x", "y", {"~e2": "1"})],
}


@pytest.fixture(scope="session")
def Dt():
    return builtin_Dt()


@pytest.fixture(scope="session")
def RegDt(Dt):
    return regular_bimodule(Dt)


@pytest.fixture(scope="session")
def odd_reps(Dt, RegDt):
    return {k: cocycle_from_document(cocycle_doc(1, v), Dt, RegDt) for k, v in ODD_REPS.items()}


@pytest.fixture(scope="session")
def even_reps(Dt, RegDt):
    return {k: cocycle_from_document(cocycle_doc(0, v), Dt, RegDt) for k, v in EVEN_REPS.items()}
