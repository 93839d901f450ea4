from .certificate import Certificate
from .family import FamilySpec
from .fingerprint import Fingerprint
from .flow_trace import FlowConfig, FlowTrace, LimitReport
from .group import GroupElement, TangentElement
from .helpers import format_matrix, format_scalar, format_spectrum, relative_norm
from .models import (AlgebraType, CertificateMode, Classification, FlowOutcome,
                     Group, LimitKind)
from .moment_value import CURVATURE_SQUARED_FACTOR, MomentValue
from .structure_tuple import MAX_Q, StructureTuple
from .validation import ValidationReport
