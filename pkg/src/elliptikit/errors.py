"""Exception taxonomy for geometric degeneracies and domain violations."""


class ElliptikitError(Exception):
    """Base class for all geometry errors raised by this package."""


class DegenerateInput(ElliptikitError):
    """Two inputs coincide (projectively) where distinct ones are required."""


class NotCollinear(ElliptikitError):
    """Cross-ratio arguments do not lie on one line."""


class DegenerateRange(ElliptikitError):
    """A cross-ratio denominator vanishes (coinciding range points)."""


class PoleInput(ElliptikitError):
    """The point is the pole of the line; the perpendicular pencil degenerates."""


class CollinearVertices(ElliptikitError):
    """Reference vertices are collinear; no triangle frame exists."""


class IllConditioned(ElliptikitError):
    """Frame staudtian below the configured floor."""


class Unrealizable(ElliptikitError):
    """Side lengths violate the spherical triangle inequalities."""


class DomainError(ElliptikitError):
    """A trigonometric argument left its valid domain."""


class VertexInput(ElliptikitError):
    """The operation is undefined at a reference vertex."""


class PoleOfSideline(ElliptikitError):
    """Pedals degenerate because the point is the pole of a sideline."""


class DegenerateTripole(ElliptikitError):
    """A tripole coordinate vanishes; the tripole degenerates to a vertex."""


class OnSideline(ElliptikitError):
    """The point lies on a sideline where the construction needs it off."""


class UndefinedCenter(ElliptikitError):
    """A center's defining expression vanishes for this frame.

    The message names the vanishing expression.
    """

    def __init__(self, center, expression):
        self.center = center
        self.expression = expression
        super().__init__(f"{center} undefined: {expression} vanishes")


class IsoscelesDegeneracy(ElliptikitError):
    """Construction needs a scalene frame (two side cosines coincide)."""


class EquilateralDegeneracy(ElliptikitError):
    """Central line collapses for an equilateral frame."""


class RankDeficient(ElliptikitError):
    """Conic matrix rank too low for the requested pole."""


class DiagonalMatrix(ElliptikitError):
    """Conic matrix is diagonal; no perspector exists."""


class DegenerateConic(ElliptikitError):
    """Conic degenerates where a proper one is required."""


class DegenerateCevianCircle(ElliptikitError):
    """Circumcevian construction degenerates (a t-expression vanishes)."""


class ConstructionDegenerate(ElliptikitError):
    """A geometric construction produced coincident elements."""


class OutsideDomain(ElliptikitError):
    """Tangent length undefined: the point lies inside the circle."""


class ConcentricCircles(ElliptikitError):
    """Radical axis undefined for concentric circles."""


class NoLimitTag(ElliptikitError):
    """Center has no euclidean-limit reference."""
