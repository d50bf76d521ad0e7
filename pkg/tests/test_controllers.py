import inspect

import pytest

from exteriorcov.controllers.census_controller import CensusController
from exteriorcov.controllers.multiplicity_controller import MultiplicityController
from exteriorcov.controllers.selftest_controller import SelftestController
from exteriorcov.controllers.sln_controller import SlnController

ENTRY_POINTS = [
    MultiplicityController.roots,
    MultiplicityController.gm,
    MultiplicityController.bazlov,
    MultiplicityController.stembridge,
    CensusController.census,
    CensusController.scan_a,
    SlnController.verify,
    SelftestController.run,
]


@pytest.mark.parametrize("method", ENTRY_POINTS, ids=lambda m: m.__qualname__)
def test_entry_points_document_their_contract(method):
    doc = inspect.getdoc(method)
    for section in ("Args:", "Returns:", "Raises:"):
        assert section in doc
    documented = doc.split("Args:")[1].split("Returns:")[0]
    for name in inspect.signature(method).parameters:
        if name != "self":
            assert f"{name}:" in documented
