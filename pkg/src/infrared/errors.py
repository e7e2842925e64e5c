"""Exception hierarchy shared by all infrared modules.

Every error carries a machine-readable ``code`` so that the CLI can surface
failures as structured JSON.
"""


class InfraredError(Exception):
    code = "error"


class DegeneratePosition(InfraredError):
    """A genericity precondition failed (ties, collinear triples, parallel
    segments, coincident anti-Stokes directions)."""

    code = "degenerate_position"


class PathNotGeneric(InfraredError):
    """A configuration path hits a wall non-transversally, at an endpoint,
    or at coincident times."""

    code = "path_not_generic"


class NotInvertible(InfraredError):
    """An exact inverse was requested for a singular matrix."""

    code = "not_invertible"


class NotSpherical(InfraredError):
    code = "not_spherical"


class InvalidEndpoints(InfraredError):
    code = "invalid_endpoints"


class InvalidReduction(InfraredError):
    code = "invalid_reduction"


class EdgePrecondition(InfraredError):
    """Circumnavigation sums require [w_i, w_j] to be a hull edge."""

    code = "edge_precondition"


class EnumerationLimit(InfraredError):
    """Desk-scale enumeration bound exceeded (see INFRARED_MAX_N)."""

    code = "enumeration_limit"


class ShapeMismatch(InfraredError):
    code = "shape_mismatch"


class InvalidInput(InfraredError):
    code = "invalid_input"
