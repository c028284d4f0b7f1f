from .errors import (
    UsageError,
    ParseError,
    InvalidArray,
    DegenerateSpectrum,
    EigenvalueMismatch,
    NotAntipodal,
    NotDistanceRegular,
    GraphTooLarge,
    UnknownFamily,
    FamilyParameterError,
    CertificateError,
    ReportThis,
)
from .config import TOL, Tolerances, DEFAULT_CONFIG_FILE
from .util import rel_close, as_rational, fmt_value, argmax_late
from .exit_code import ExitCode
from .log import TRACE, LFloats
