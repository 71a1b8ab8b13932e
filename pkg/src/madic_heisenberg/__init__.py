"""Exact arithmetic and geometry of m-adic Heisenberg groups.

Submodules: tower (ideal-chain ultrametrics on Z), madic (the completion
at finite precision), hmodule (free modules and bilinear forms),
heisenberg (group law, dilations, chain subgroups, normality checks),
haar (exact invariant integration), localization (rings and modules of
fractions), cli (the mheis command).
"""

from . import haar, heisenberg, hmodule, localization, madic, tower
from .errors import DomainError
from .haar import CosetReps, CylinderFunction, enumerate_cosets, integrate, translate
from .heisenberg import ChainFamily, HeisenbergContext, HPoint
from .hmodule import BilinearForm, ModuleVec
from .madic import MadicInt, ValuationResult
from .tower import ChainSpec, RadiusProfile, UltraDistance, distance

__all__ = [
    "BilinearForm",
    "ChainFamily",
    "ChainSpec",
    "CosetReps",
    "CylinderFunction",
    "DomainError",
    "HPoint",
    "HeisenbergContext",
    "MadicInt",
    "ModuleVec",
    "RadiusProfile",
    "UltraDistance",
    "ValuationResult",
    "distance",
    "enumerate_cosets",
    "haar",
    "heisenberg",
    "hmodule",
    "integrate",
    "localization",
    "madic",
    "tower",
    "translate",
]

__version__ = "0.1.0"
