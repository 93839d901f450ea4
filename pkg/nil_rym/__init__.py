from nil_rym.actions import act, act_glp, act_glq, act_lie, fingerprint
from nil_rym.algebra import algebra_type, bracket, effective_p, structure_constants, validate
from nil_rym.catalogue import basis_matrix, build, concat, tune_parameter
from nil_rym.flow import detect_limit, gradient, integrate, integrate_many
from nil_rym.moment import m1, m2, m_full, m_slq
from nil_rym.models import FamilySpec, FlowConfig, Group, StructureTuple
from nil_rym.soliton import certify_gfi, certify_ricci, certify_ricci_gfi, certify_rym, classify

__version__ = "0.1.0"
