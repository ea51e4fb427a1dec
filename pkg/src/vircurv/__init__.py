"""Exact Virasoro-orbit geometry: cocycle, metric, connections, curvature."""

from .complex_geometry import (
    hs_partial_sum,
    metric_defect_tilde,
    nabla_J,
    nabla_tilde,
    nijenhuis,
    q_tensor,
    torsion_tilde,
)
from .connection import (
    SignConvention,
    lambda_coeff,
    metric_defect,
    nabla,
    torsion_nabla,
    u_tensor,
    u_tensor_closed,
    u_tensor_oracle,
)
from .curvature import (
    ComplexField,
    RicciReport,
    complex_bracket,
    curvature,
    from_complex,
    nabla_tilde_complex,
    ricci_closed_form,
    ricci_coefficient,
    ricci_partial,
    ricci_regularized,
    ricci_report,
    to_complex,
)
from .errors import DomainError, ParameterError, ParseError, VircurvError
from .exact import ComplexScalar, ExactScalar, format_scalar, parse_scalar, rational
from .parser import format_field, parse_field
from .trig import TrigField, apply_J, basis_f, basis_g, bracket, project_h, project_m
from .virasoro import PRESETS, CentralParams, cocycle, inner_B, theta

__version__ = "0.1.0"
