#!/usr/bin/env python3
"""
Branch-and-Bound Engine
Depth-first search over multisets of G• with admissible bounds.

Terms are taken in the objective's fixed element order; at every node the
next term is chosen from the remaining positions and multiplicities are
tried in descending order. The reported witness is the first strict
improvement in that DFS order, which makes results independent of the
thread count: parallel runs split the root's children into subtrees,
prune against the shared best only strictly, and combine by value with
ties going to the earliest subtree.
"""

import threading
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from zslab.groups.group import GroupSpec
from zslab.observability.logger import get_logger
from zslab.sequences.sequence import Sequence
from zslab.sequences.weights import WeightFunction

logger = get_logger(__name__)


class Objective(ABC):
    """
    A maximisation problem over sequences explored by the engine.

    Subclasses define the search state; the engine only calls these hooks.
    """

    def __init__(self, group: GroupSpec, weight: WeightFunction):
        self.group = group
        self.weight = weight

        orders = group.order_table
        nonzero = range(1, group.order)
        # high-order elements first: they grow the sumset fastest
        self.order: List[int] = sorted(nonzero, key=lambda i: (-int(orders[i]), i))
        self.weights = {i: weight(int(orders[i])) for i in nonzero}

        suffix = [Fraction(0)] * (len(self.order) + 1)
        for pos in range(len(self.order) - 1, -1, -1):
            suffix[pos] = max(suffix[pos + 1], self.weights[self.order[pos]])
        self.suffix_max = suffix
        self.weight_max = suffix[0]

    @abstractmethod
    def root(self) -> Any:
        """State of the empty sequence"""

    @abstractmethod
    def extend(self, state: Any, index: int) -> Optional[Any]:
        """State after appending one term, or None when infeasible"""

    @abstractmethod
    def leaf_value(self, state: Any) -> Optional[Fraction]:
        """Objective value of the node, or None when the node is not a candidate"""

    @abstractmethod
    def bound(self, state: Any, pos: int) -> Fraction:
        """Upper bound on leaf_value over the subtree using positions >= pos"""

    @abstractmethod
    def witness(self, state: Any, chosen: Tuple[int, ...]) -> Sequence:
        """Sequence realising leaf_value for the node reached through `chosen`"""


class SharedBest:
    """Monotonically improving best value shared between workers"""

    def __init__(self, value: Optional[Fraction] = None):
        self._value = value
        self._lock = threading.Lock()

    def offer(self, value: Fraction) -> None:
        with self._lock:
            if self._value is None or value > self._value:
                self._value = value

    @property
    def value(self) -> Optional[Fraction]:
        with self._lock:
            return self._value


@dataclass
class SearchOutcome:
    value: Optional[Fraction]
    witness: Optional[Sequence]
    nodes: int
    optima: List[Sequence] = field(default_factory=list)


class _Explorer:
    """
    Serial DFS over one subtree.

    In maximise mode (target None) it keeps the first strict improvement;
    in collect mode it records every candidate whose value equals target.
    """

    def __init__(self, objective: Objective, shared: Optional[SharedBest], target: Optional[Fraction]):
        self.obj = objective
        self.shared = shared
        self.target = target
        self.best: Optional[Fraction] = None
        self.witness: Optional[Sequence] = None
        self.optima: List[Sequence] = []
        self.nodes = 0

    def pruned(self, bound: Fraction) -> bool:
        if self.target is not None:
            return bound < self.target
        if self.best is not None and bound <= self.best:
            return True
        if self.shared is not None:
            shared = self.shared.value
            if shared is not None and bound < shared:
                return True
        return False

    def evaluate(self, state: Any, chosen: Tuple[int, ...]) -> None:
        self.nodes += 1
        value = self.obj.leaf_value(state)
        if value is None:
            return
        if self.target is not None:
            if value == self.target:
                self.optima.append(self.obj.witness(state, chosen))
            return
        if self.best is None or value > self.best:
            self.best = value
            self.witness = self.obj.witness(state, chosen)
            if self.shared is not None:
                self.shared.offer(value)

    def chain(self, state: Any, index: int) -> List[Any]:
        """States with 1, 2, ... copies of index appended, until infeasible"""
        states = []
        current = self.obj.extend(state, index)
        while current is not None:
            states.append(current)
            current = self.obj.extend(current, index)
        return states

    def visit(self, state: Any, start: int, chosen: Tuple[int, ...]) -> None:
        self.evaluate(state, chosen)
        self.expand(state, start, chosen)

    def expand(self, state: Any, start: int, chosen: Tuple[int, ...]) -> None:
        order = self.obj.order
        for pos in range(start, len(order)):
            # suffix bounds only shrink with pos
            if self.pruned(self.obj.bound(state, pos)):
                return
            index = order[pos]
            states = self.chain(state, index)
            for m in range(len(states), 0, -1):
                self.visit(states[m - 1], pos + 1, chosen + (index,) * m)


class BranchAndBound:
    """Runs an Objective serially or split over a thread pool"""

    def __init__(self, objective: Objective, threads: int = 1):
        self.objective = objective
        self.threads = max(1, threads)

    def maximize(self) -> SearchOutcome:
        return self._run(target=None)

    def collect(self, target: Fraction) -> SearchOutcome:
        """Every candidate with value == target, in DFS order"""
        return self._run(target=target)

    def _run(self, target: Optional[Fraction]) -> SearchOutcome:
        obj = self.objective
        root = obj.root()

        if self.threads == 1:
            explorer = _Explorer(obj, None, target)
            explorer.visit(root, 0, ())
            return SearchOutcome(explorer.best, explorer.witness, explorer.nodes, explorer.optima)

        head = _Explorer(obj, None, target)
        head.evaluate(root, ())
        shared = SharedBest(head.best)

        tasks = []
        for pos, index in enumerate(obj.order):
            states = head.chain(root, index)
            for m in range(len(states), 0, -1):
                tasks.append((pos, states[m - 1], (index,) * m))

        def run(task) -> _Explorer:
            pos, state, chosen = task
            explorer = _Explorer(obj, shared, target)
            if target is None:
                bound = obj.bound(root, pos)
                if shared.value is not None and bound < shared.value:
                    return explorer
            elif obj.bound(root, pos) < target:
                return explorer
            explorer.visit(state, pos + 1, chosen)
            return explorer

        logger.debug("search_split", subtrees=len(tasks), threads=self.threads)
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            results = list(pool.map(run, tasks))

        best, witness, optima = head.best, head.witness, list(head.optima)
        nodes = head.nodes
        for explorer in results:
            nodes += explorer.nodes
            optima.extend(explorer.optima)
            if explorer.best is not None and (best is None or explorer.best > best):
                best, witness = explorer.best, explorer.witness
        return SearchOutcome(best, witness, nodes, optima)
