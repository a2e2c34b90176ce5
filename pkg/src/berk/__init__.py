"""Non-archimedean fields, the Berkovich projective line, Moebius maps and
Schottky groups."""

from .errors import (
    BasePointNotInDomain, BerkError, Inconclusive, PrecisionExhausted, SearchFailed,
)
from .field import FieldSpec
from .logvalue import INF, NEG_INF, LogValue
from .poly import Poly, field_sqrt, hensel_root
from .berkline import BPoint, GDisc, classify, join, length, path, seminorm
from .moebius import Moebius, apply_disc, apply_point, ford_discs, from_koebe, is_loxodromic, koebe
from .schottky import (
    Figure, base_point, express_in_group, find_figure, fundamental_skeleton, genus,
    limit_cover, normalizes, quotient_skeleton, radius_profile, verify_figure,
)
from .potential import RationalFn, eval_abs, harmonicity, newton_polygon, slope_along_branch

__version__ = "0.1.0"

__all__ = [
    "BasePointNotInDomain", "BerkError", "Inconclusive", "PrecisionExhausted", "SearchFailed",
    "FieldSpec", "INF", "NEG_INF", "LogValue", "Poly", "field_sqrt", "hensel_root",
    "BPoint", "GDisc", "classify", "join", "length", "path", "seminorm",
    "Moebius", "apply_disc", "apply_point", "ford_discs", "from_koebe", "is_loxodromic", "koebe",
    "Figure", "base_point", "express_in_group", "find_figure", "fundamental_skeleton", "genus",
    "limit_cover", "normalizes", "quotient_skeleton", "radius_profile", "verify_figure",
    "RationalFn", "eval_abs", "harmonicity", "newton_polygon", "slope_along_branch",
]
