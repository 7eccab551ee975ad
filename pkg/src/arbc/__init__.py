"""McEliece-type encryption with arbitrary-weight error vectors.

Submodules:

* :mod:`arbc.gf2` -- bit-packed GF(2) matrices and vectors
* :mod:`arbc.codes` -- linear and BCH codes, weight spectra, GV bound
* :mod:`arbc.classic` -- original McEliece with a syndrome-table decoder
* :mod:`arbc.scheme` -- the arbitrary-error scheme
* :mod:`arbc.attacks` -- ISD, direct attack, syndrome-transform study
* :mod:`arbc.analysis` -- key sizes and workfactors
* :mod:`arbc.keyfile`, :mod:`arbc.cli` -- file formats and the ``arbc`` command
"""

from .gf2 import BitMatrix
from .codes import LinearCode, bch_build, code_from_generator, hamming74
from .classic import classic_decrypt, classic_encrypt, classic_keygen
from .scheme import arb_decrypt, arb_encrypt, arb_keygen

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "LinearCode",
    "bch_build",
    "code_from_generator",
    "hamming74",
    "classic_keygen",
    "classic_encrypt",
    "classic_decrypt",
    "arb_keygen",
    "arb_encrypt",
    "arb_decrypt",
]
