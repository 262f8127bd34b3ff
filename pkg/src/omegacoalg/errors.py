"""Exception hierarchy for omegacoalg."""


class OmegaCoalgError(Exception):
    """Base class for all omegacoalg errors."""


class ArityMismatch(OmegaCoalgError):
    """A label was given the wrong number of children."""


class RaggedDepth(OmegaCoalgError):
    """Children of a node do not all sit at the same approximation depth."""


class CannotTruncateUnit(OmegaCoalgError):
    """There is no approximation stage below depth 0."""


class DepthTooLarge(OmegaCoalgError):
    """Requested truncation target exceeds the depth of the tree."""


class UnknownLabel(OmegaCoalgError):
    """A label outside the container's label domain was used."""


class NeedsFiniteLabels(OmegaCoalgError):
    """Operation requires the container to enumerate its labels."""


class SizeBoundExceeded(OmegaCoalgError):
    """Enumeration would materialize more trees than the configured bound."""


class ConeLawViolation(OmegaCoalgError):
    """Cone legs fail to commute with the chain projections."""


class LabelDrift(OmegaCoalgError):
    """Stages of a supposedly compatible family disagree on the root label."""


class DepthBoundExceeded(OmegaCoalgError):
    """Requested approximation depth exceeds the configured bound."""


class InvalidCoalgebra(OmegaCoalgError):
    """A finitely presented coalgebra violates arity or state closure."""


class NeedsFiniteStates(OmegaCoalgError):
    """Operation requires the coalgebra to enumerate its states."""


class NotAMorphism(OmegaCoalgError):
    """Uniqueness probe invoked on a candidate that is not a morphism."""


class InvalidWitness(OmegaCoalgError):
    """A bisimulation witness fails verification."""


class PairNotRelated(OmegaCoalgError):
    """The queried pair of states is not in the witness relation."""


class SortMismatch(OmegaCoalgError):
    """Sorts of an indexed operation's arguments disagree."""


class SpecValidationError(OmegaCoalgError):
    """A spec document failed schema or consistency validation."""
