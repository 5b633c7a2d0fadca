from .fac_config import FactorConfig
from .fac_exception import FactorException, FactorClientError, FactorSpecError, FactorStructureError
from .fac_exception import NormalFormError, MorseMatchingError, GarsideError, ChainComplexError, FactorBudgetError
from .foundation import Alphabet, FactorableMonoid, FiniteMonoid, AxiomReport, validate_handle, ball
from .factorability import PhiTable, PhiMonoid, check_local_factorability, induced_rewriting_system
from .rewriting import RewriteRule, RewriteSystem, reduce
from .morse import MorseMatching, visy_complex, bar_complex_truncated, homology
from .garside import CoxeterMatrix, ArtinMonoid, GarsideStructure, GarsideGroup
from .spec_file import load_spec, loads_spec, dumps_spec, build_handle
from .version import __version__

import logging

try:
    from logging import NullHandler
except ImportError:
    class NullHandler(logging.Handler):
        def emit(self, record):
            pass

logging.getLogger(__name__).addHandler(NullHandler())
