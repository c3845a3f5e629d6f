"""Bridgeless cubic planar supergraphs of subcubic graphs."""

from .antifactor import build_instance, solve
from .assemble import augment, augment_embedded, oracle_decide
from .fixed import AugmentationResult, augment_fixed
from .generate import random_feasible_subcubic_planar, random_subcubic_planar
from .graph import Embedding, Multigraph, planarity_embed
from .labels import variable_augment
from .outcomes import Infeasible, PreconditionError
from .verify import VerificationReport, verify

__all__ = [
    "AugmentationResult",
    "Embedding",
    "Infeasible",
    "Multigraph",
    "PreconditionError",
    "VerificationReport",
    "augment",
    "augment_embedded",
    "augment_fixed",
    "build_instance",
    "oracle_decide",
    "planarity_embed",
    "random_feasible_subcubic_planar",
    "random_subcubic_planar",
    "solve",
    "variable_augment",
    "verify",
]
