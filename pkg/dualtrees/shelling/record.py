from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from dualtrees.complex.planar_complex import SCHEMA_VERSION, Diagram, UnsupportedSchemaVersion
from dualtrees.shelling.state import (
    ShellingMove,
    ShellingState,
    move_from_dict,
)
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class IncompleteShelling(RuntimeError):
    pass


@dataclass
class ShellingRecord:
    """
    A shelling of a diagram down to its base vertex. ``trace[i]`` is the
    boundary length after i moves, so the trace has one more entry than
    there are moves and ends at 0.
    """

    base: int
    moves: List[ShellingMove]
    trace: List[int]
    strategy: str = "manual"
    diagram: Optional[Diagram] = field(default=None, repr=False, compare=False)

    @property
    def max_boundary(self) -> int:
        return max(self.trace)

    @property
    def n_moves(self) -> int:
        return len(self.moves)

    def argmax_boundary(self) -> int:
        return self.trace.index(self.max_boundary)

    def deltas(self) -> List[int]:
        return [b - a for a, b in zip(self.trace, self.trace[1:])]

    def states(self, diagram: Optional[Diagram] = None):
        """
        iterate over the states Delta^0, ..., Delta^m. a single state object
        is updated in place and yielded after every move
        """

        diagram = self.diagram if diagram is None else diagram

        assert diagram is not None, "the record carries no diagram"

        state = ShellingState(diagram)

        yield state

        for move in self.moves:

            state.apply(move)

            yield state

    def to_dict(self) -> dict:

        return dict(
            version=SCHEMA_VERSION,
            strategy=self.strategy,
            base=self.base,
            moves=[m.to_dict() for m in self.moves],
            trace=list(self.trace),
            max_boundary=self.max_boundary,
        )

    @classmethod
    def from_dict(cls, data: dict, diagram: Optional[Diagram] = None) -> "ShellingRecord":

        if data.get("version") != SCHEMA_VERSION:

            raise UnsupportedSchemaVersion(
                f"record schema version {data.get('version')} is not {SCHEMA_VERSION}"
            )

        return cls(
            base=int(data["base"]),
            moves=[move_from_dict(m) for m in data["moves"]],
            trace=[int(x) for x in data["trace"]],
            strategy=data.get("strategy", "manual"),
            diagram=diagram,
        )

    def summary(self) -> str:

        return (
            f"{self.strategy}: {self.n_moves} moves, max boundary {self.max_boundary} "
            f"at step {self.argmax_boundary()}"
        )


class RecordBuilder(object):
    def __init__(self, diagram: Diagram, strategy: str):
        """
        Applies moves to a private state and keeps the trace

        :param diagram: the diagram to shell
        :param strategy: name stored on the record
        :returns:
        :rtype:

        """

        self._state: ShellingState = ShellingState(diagram)
        self._diagram: Diagram = diagram
        self._strategy: str = strategy
        self._moves: List[ShellingMove] = []
        self._trace: List[int] = [self._state.boundary_length]

    @property
    def state(self) -> ShellingState:
        return self._state

    def apply(self, move: ShellingMove) -> int:

        length = self._state.apply(move)
        self._moves.append(move)
        self._trace.append(length)

        return length

    def strip_pendants(self, around=None) -> None:

        length = self._state.boundary_length

        for move in self._state.strip_pendants(around=around):

            length -= 2
            self._moves.append(move)
            self._trace.append(length)

        assert length == self._state.boundary_length

    def finish(self) -> ShellingRecord:

        if not self._state.is_finished:

            raise IncompleteShelling(
                f"{self._strategy} shelling stopped at {self._state}"
            )

        record = ShellingRecord(
            base=self._diagram.base,
            moves=self._moves,
            trace=self._trace,
            strategy=self._strategy,
            diagram=self._diagram,
        )

        logger.debug(record.summary())

        return record


def replay(diagram: Diagram, moves: Sequence[ShellingMove], strategy: str = "replay") -> ShellingRecord:
    """
    apply the moves to a fresh copy of the diagram, recounting the boundary
    from scratch after every move

    :param diagram: the initial diagram
    :param moves: the move sequence
    :returns: a record whose trace is recomputed
    :rtype:

    """

    state = ShellingState(diagram)
    trace = [state.recount_boundary()]

    for move in moves:

        state.apply(move)
        trace.append(state.recount_boundary())

    if not state.is_finished:

        raise IncompleteShelling(f"replay stopped at {state}")

    return ShellingRecord(
        base=diagram.base,
        moves=list(moves),
        trace=trace,
        strategy=strategy,
        diagram=diagram,
    )
