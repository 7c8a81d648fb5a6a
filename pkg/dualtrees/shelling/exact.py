import heapq
import itertools
from typing import Dict, List, Optional, Tuple

from dualtrees.complex.planar_complex import Diagram
from dualtrees.config import dualtrees_config
from dualtrees.shelling.record import ShellingRecord, replay
from dualtrees.shelling.state import ShellingMove, ShellingState, apply_move
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class TooLargeForExactSearch(RuntimeError):
    pass


def exact_filling_length(
    d: Diagram, cap: Optional[int] = None, state_limit: Optional[int] = None
) -> Tuple[int, ShellingRecord]:
    """
    the filling length of a small diagram: the least, over all shellings,
    of the largest boundary length met. States are the subdiagrams,
    identified by their surviving edges and cells, and are expanded in
    order of the smallest achievable running maximum, so the first
    finished state reached is optimal.

    :param d: the diagram
    :param cap: largest allowed area + edge count
    :param state_limit: largest number of expanded states
    :returns: the filling length and a witness shelling
    :rtype:

    """

    cap = dualtrees_config.shelling.exact_cap if cap is None else cap
    state_limit = (
        dualtrees_config.shelling.exact_state_limit
        if state_limit is None
        else state_limit
    )

    assert cap > 0, f"cap must be positive, got {cap}"

    size = d.area + d.complex.n_edges

    if size > cap:

        raise TooLargeForExactSearch(
            f"area + edges = {size} exceeds the exact search cap {cap}"
        )

    start = ShellingState(d)
    start_key = start.key()

    best: Dict[tuple, int] = {start_key: start.boundary_length}
    states: Dict[tuple, ShellingState] = {start_key: start}
    parent: Dict[tuple, Tuple[tuple, ShellingMove]] = {}

    tie = itertools.count()
    heap = [(start.boundary_length, next(tie), start_key)]
    expanded = 0

    while heap:

        cost, _, key = heapq.heappop(heap)

        if cost > best[key]:
            continue

        state = states[key]

        if state.is_finished:

            moves: List[ShellingMove] = []

            while key in parent:

                key, move = parent[key]
                moves.append(move)

            record = replay(d, moves[::-1], strategy="exact")

            assert record.max_boundary == cost

            logger.debug(f"exact filling length {cost} after {expanded} expansions")

            return cost, record

        expanded += 1

        if expanded > state_limit:

            raise TooLargeForExactSearch(
                f"exact search expanded more than {state_limit} states"
            )

        for move in state.legal_moves():

            new = apply_move(state, move)
            new_cost = max(cost, new.boundary_length)
            new_key = new.key()

            if new_key not in best or new_cost < best[new_key]:

                best[new_key] = new_cost
                states[new_key] = new
                parent[new_key] = (key, move)
                heapq.heappush(heap, (new_cost, next(tie), new_key))

    # every nonempty state has a legal move, so this is never reached
    raise RuntimeError("exact search exhausted without reaching the base vertex")
