from collections import namedtuple
from enum import Enum

AlgebraType = namedtuple("AlgebraType", ["p", "q"])
Classification = namedtuple("Classification", ["rym", "ricci", "gfi", "ricci_and_gfi", "consistent"])


class Group(Enum):
    GLQ = "glq"
    SLQ = "slq"
    FULL = "full"


class CertificateMode(Enum):
    RYM = "rym"
    RICCI = "ricci"
    GFI = "gfi"
    RICCI_AND_GFI = "ricci_and_gfi"


class FlowOutcome(Enum):
    CONVERGED_MINIMAL = "converged_minimal"
    CONVERGED_DISTINGUISHED = "converged_distinguished"
    DEGENERATED = "degenerated"
    STEP_LIMIT = "step_limit"


class LimitKind(Enum):
    MINIMAL = "minimal"
    DISTINGUISHED = "distinguished"
    DEGENERATED = "degenerated"
    INCONCLUSIVE = "inconclusive"
