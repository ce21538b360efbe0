"""g2cover: exact certificates of integral-point effectivity for genus-2
curves with one marked point, via degree-3 unramified covers and torsion
on the elliptic quotient."""

from .genus2 import (
    Decomposition,
    MarkedPoint,
    QuarticNormalForm,
    SexticModel,
    intro_family_sextic,
    quartic_singularity_audit,
    quartic_to_sextic,
    verify_decomposition,
)
from .cover import (
    CoverData,
    InfinityFiber,
    QuotientCubic,
    build_cover,
    elliptic_quotient,
    infinity_fiber,
)
from .cubic2w import CubicWeierstrassMap, cubic_to_weierstrass
from .families import GridSpec, ParamFamily, ScanReport, identity_check, scan, specialize
from .heights import canonical_height, height_pairing, regulator
from .igusa import IgusaClebsch, igusa_clebsch
from .multipoly import MultiPoly, multi_eval
from .polys import UniPoly, discriminant, quad_solve, resultant
from .quadfield import QuadElem
from .sigma import SigmaReport, certificate_json, sigma_torsion
from .trinomial import TrinomialClass, TrinomialEq, classify
from .weier import (
    EPoint,
    WeierstrassCurve,
    add,
    mul,
    neg,
    sub,
    torsion_order_quadratic,
    torsion_order_rational,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
