from .verdicts import GammaVerdict, Status, merge  # noqa
from .decompose import Decomposition, decompose_at, split_at  # noqa
from .rational import RationalTreeAnalysis, reduce_to_rational  # noqa
from .certificate import certificate_pieces, find_certificate, is_elementary_infinite  # noqa
from .engines import (  # noqa
    THEOREM_DICT,
    EngineResult,
    get_theorem_class,
    register_theorem,
    theorem_a,
    theorem_b,
    theorem_c,
)
from .analyzer import Analyzer, Report, agrees  # noqa


def build_analyzer(args) -> Analyzer:
    return Analyzer.from_args(args)
