"""Exact fixed-point computations for level-k loop group data."""
from .exact import Cyclotomic, NotRationalError, exp2pi, root_of_unity
from .rootsys import RootSystem, SimpleType, WeylCapExceeded, build_root_system
from .levelk import TorusElement, level_weights, t_lambda, torus_group_order
from .alcove import AlcoveFace, FaceData, face_data, face_of, faces
from .characters import CharacterTable, weyl_character
from .fusion import FusionRing, fusion_coefficient, fusion_product, verlinde_number
from .engine import (ClosedContribution, FixedPointModel, IsolatedFixedPoint, MultiplicityTable,
                     coadjoint_orbit_model, evaluate_model, extract_multiplicities)

__version__ = "0.1.0"
