"""Twists of hyperelliptic curves over Q by cocycles through cyclotomic fields."""

from .autos import (GeomAutomorphism, MobiusAutomorphism, canonical_lift,
                    compare_automorphisms, psi_embed)
from .cocycle import Cocycle, cocycle_from_generators, try_lift_gl2
from .models import (GeometricModel, HyperellipticModel, to_geometric,
                     to_hyperelliptic, validate_geometric)
from .s4 import s4_twist, validate_pol34
from .twist import compute_twist, twist_gl2_fastpath, verify_twist

__all__ = [
    "GeomAutomorphism", "MobiusAutomorphism", "canonical_lift",
    "compare_automorphisms", "psi_embed", "Cocycle", "cocycle_from_generators",
    "try_lift_gl2", "GeometricModel", "HyperellipticModel", "to_geometric",
    "to_hyperelliptic", "validate_geometric", "s4_twist", "validate_pol34",
    "compute_twist", "twist_gl2_fastpath", "verify_twist",
]
