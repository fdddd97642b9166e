"""Error types with stable machine-readable codes.

Every failure the library can raise on purpose carries a short ``code``
string so CLI callers and tests can match on it without parsing prose.
"""

from __future__ import annotations


class OclError(Exception):
    """Base error. ``code`` is a stable kebab-case identifier."""

    code = "error"

    def __init__(self, message: str = "", code: str | None = None):
        if code is not None:
            self.code = code
        super().__init__(message or self.code)


class AdmissibilityError(OclError):
    """Configuration violates the hard-core constraint or has bad orientations."""

    code = "not-admissible"


class OrientationError(OclError):
    """Orientation vector is not unit length within tolerance."""

    code = "bad-orientation"


class RegionError(OclError):
    """Lattice patch region is unbounded or degenerate."""

    code = "unbounded-region"


class RhoError(OclError):
    """Stretch parameter outside [0, 1)."""

    code = "invalid-rho"


class GammaError(OclError):
    """Threshold parameter outside [0, 1]."""

    code = "invalid-gamma"


class UnsupportedGammaError(OclError):
    """Operation only defined at gamma = sqrt(3)/2."""

    code = "unsupported-gamma"


class PlanarityError(OclError):
    """Embedded graph has crossing edges; face extraction is meaningless."""

    code = "nonplanar"


class DecompositionError(OclError):
    """Exact energy decomposition identity failed (internal bug trap)."""

    code = "decomposition-violated"


class TriangulationError(OclError):
    """No valid diagonal found while triangulating a face walk."""

    code = "triangulation-failed"


class ProfileError(OclError):
    """Boundary-profile hypotheses not met (disconnected, wires, or
    self-touching outer boundary)."""

    code = "profile-hypotheses"


class ConnectivityError(OclError):
    """Operation requires a connected bond graph."""

    code = "not-connected"


class TooSmallError(OclError):
    """Operation requires more particles than were given."""

    code = "too-small"


class OracleLimitError(OclError):
    """Exhaustive oracle asked for more particles than it can enumerate."""

    code = "oracle-limit"


class ParseError(OclError):
    """Configuration file is malformed; message carries the 1-based line."""

    code = "parse-error"
