"""Exception hierarchy shared by all vlekit modules.

Every error carries a machine-readable ``code`` so the HTTP/CLI layers can
surface diagnostics without string matching.
"""


class VlekitError(Exception):
    """Base class for all vlekit domain errors."""

    code = "error"


class InvalidSmiles(VlekitError):
    """SMILES input could not be parsed into a molecular graph."""

    code = "invalid_smiles"

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class ParseError(InvalidSmiles):
    """SMILES syntax error with the byte offset of the offending token."""

    code = "parse_error"


class NotCovered(VlekitError):
    """No configured source can supply the requested property data."""

    code = "not_covered"


class UnknownModel(VlekitError):
    """Requested activity-model family is not registered."""

    code = "unknown_model"


class DecompositionRequired(VlekitError):
    """A group-contribution model was chosen but a component has no groups."""

    code = "decomposition_required"


class DecompositionFailed(VlekitError):
    """Molecule cannot be covered by the available structural groups."""

    code = "decomposition_failed"

    def __init__(self, message, uncovered=()):
        super().__init__(message)
        self.uncovered = tuple(uncovered)


class SingularTemperature(VlekitError):
    """Antoine evaluation at T + C = 0."""

    code = "singular_temperature"


class SingularPressure(VlekitError):
    """Antoine inversion where A - log10(p/base) = 0."""

    code = "singular_pressure"


class NonPhysical(VlekitError):
    """A solved state variable came out non-physical (e.g. T <= 0)."""

    code = "non_physical"


class AlphaOutOfRange(VlekitError):
    """NRTL non-randomness factor outside the open interval (0, 2)."""

    code = "alpha_out_of_range"


class MissingGroupData(VlekitError):
    """A structural group lacks R or Q in the active parameter table."""

    code = "missing_group_data"


class ParameterGap(VlekitError):
    """A required main-group interaction pair is absent from the table."""

    code = "parameter_gap"

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class GridMismatch(VlekitError):
    """Fit targets do not cover the requested composition/temperature grid."""

    code = "grid_mismatch"


class RangeRequired(VlekitError):
    """Temperature-dependent fit variant needs a temperature range."""

    code = "range_required"


class RangeForbidden(VlekitError):
    """Isothermal-only fit variant was given a temperature range."""

    code = "range_forbidden"


class AllStartsFailed(VlekitError):
    """Every optimizer start failed to produce a finite solution."""

    code = "all_starts_failed"


class NoConvergence(VlekitError):
    """An iterative solve hit its iteration cap before reaching tolerance."""

    code = "no_convergence"


class BracketFailure(VlekitError):
    """Root bracketing found no sign change in the widened interval."""

    code = "bracket_failure"


class ConsistencyViolation(VlekitError):
    """A constructed VLE diagram failed the thermodynamic consistency gate."""

    code = "consistency_violation"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DiagramPointErrors(VlekitError):
    """One or more grid points of a VLE diagram could not be solved.

    ``failures`` holds (line, composition, error) triples.
    """

    code = "diagram_point_errors"

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = tuple(failures)


class RemoteUnavailable(VlekitError):
    """External model adapter endpoint could not be reached."""

    code = "remote_unavailable"


class ContractViolation(VlekitError):
    """External adapter returned data violating the model invariants."""

    code = "contract_violation"


class ConfigError(VlekitError):
    """Service configuration file or table could not be loaded."""

    code = "config_error"
