"""Finitely presented categories, sesquicategories and 2-categories, the
tensor products between them, and machine-checked cocategory structures.

The package is organized around worlds (finite sets, finitely presented
categories, higher presentations) that share one interface: equality of
maps, pushouts, and mediating maps out of pushouts.  Cocategory data is
checked law by law against that interface, so the same checker runs the
positive examples, the mutants, and the interchange obstruction.
"""

from .checks import (default_manifest, manifest_hash, registered_checks,
                     run_check, run_suite)
from .cocats import (check_cocategory, check_double_cocategory,
                     check_interchange, standard_instance)
from .errors import CocatlabError
from .fincat import Presentation, catalog_category, endofunctor_monoid
from .higher import HigherPresentation
from .monoids import (FinMonoid, catalog_monoid, search_comultiplication,
                      search_endo_2cell)
from .report import BOUNDED, FAIL, PASS, CheckReport
from .tensors import KINDS, tensor

__version__ = "0.1.0"

__all__ = [
    "BOUNDED", "CheckReport", "CocatlabError", "FAIL", "FinMonoid",
    "HigherPresentation", "KINDS", "PASS", "Presentation",
    "catalog_category", "catalog_monoid", "check_cocategory",
    "check_double_cocategory", "check_interchange", "default_manifest",
    "endofunctor_monoid", "manifest_hash", "registered_checks", "run_check",
    "run_suite", "search_comultiplication", "search_endo_2cell",
    "standard_instance", "tensor", "__version__",
]
