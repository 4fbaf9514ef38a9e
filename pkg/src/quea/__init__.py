"""quea: exact computer algebra for quantized enveloping algebras U_q(g)
and the representation theory of complex semisimple quantum groups."""

__version__ = "0.1.0"

from .scalars import QContext, PhasedExponent  # noqa: F401
from .rootdata import RootDatum, Weight  # noqa: F401
