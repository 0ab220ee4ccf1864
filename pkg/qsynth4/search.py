"""
Bidirectional breadth-first search for short M-S decompositions

States are permutations of the 4^w basis states (w <= 2), stored as uint8
arrays: state[s] is the image of basis state s. The forward side starts at
the identity and applies gates after it; the backward side starts at the
target and applies inverse gates. A permutation reached from both sides
splits a realization of the target.

Generators: MS(i -> j, shift) and 1-qudit Shift(wire, shift) for every
non-identity catalog shift.
"""

from dataclasses import dataclass

import numpy as np

from qsynth4.circuit import Circuit, CircuitBuilder, Gate, MSGate, ShiftGate
from qsynth4.errors import LoweringError
from qsynth4.gf4 import shift_catalog
from qsynth4.simulator import state_permutation
from qsynth4.utils import log

MAX_SEARCH_GATES = 6


@dataclass(frozen=True)
class SearchResult:
    gates: tuple[Gate, ...]
    forward_states: int
    backward_states: int

    def __len__(self):
        return len(self.gates)


def _wires_circuit(width: int, gates=()) -> Circuit:
    builder = CircuitBuilder()
    for _ in range(width):
        builder.add_input()
    builder.extend(gates)
    return builder.build()


def gate_permutation(gates, width: int) -> np.ndarray:
    """Basis-state permutation realized by a gate sequence on width wires"""
    return state_permutation(_wires_circuit(width, gates)).astype(np.uint8)


def generators(width: int) -> list[Gate]:
    shifts = [s for s in shift_catalog() if not s.is_identity]
    gates: list[Gate] = []
    for wire in range(width):
        gates.extend(ShiftGate(wire, s) for s in shifts)
    for control in range(width):
        for target in range(width):
            if control != target:
                gates.extend(MSGate(control, target, s) for s in shifts)
    return gates


def _keys(states: np.ndarray) -> np.ndarray:
    """One uint64 per permutation (entries are < 16)"""
    powers = np.uint64(16) ** np.arange(states.shape[1] - 1, -1, -1, dtype=np.uint64)
    return (states.astype(np.uint64) * powers).sum(axis=1, dtype=np.uint64)


class _Side:
    """One search direction: visited map key -> (parent key, gate index, depth)"""

    def __init__(self, start: np.ndarray):
        key = int(_keys(start[None, :])[0])
        self.visited: dict[int, tuple[int | None, int | None, int]] = {key: (None, None, 0)}
        self.frontier = start[None, :]
        self.frontier_keys = [key]
        self.depth = 0

    def expand(self, tables: list[np.ndarray], other: "_Side") -> list[int]:
        """Grow one full BFS layer; return keys also reached by the other side"""
        self.depth += 1
        rows, keys, meets = [], [], []
        for index, table in enumerate(tables):
            images = table[self.frontier]
            for row, (parent, key) in enumerate(zip(self.frontier_keys, _keys(images).tolist())):
                if key in self.visited:
                    continue
                self.visited[key] = (parent, index, self.depth)
                rows.append(images[row])
                keys.append(key)
                if key in other.visited:
                    meets.append(key)
        self.frontier = np.array(rows, dtype=np.uint8).reshape(len(rows), tables[0].shape[0])
        self.frontier_keys = keys
        return meets

    def path(self, key: int) -> list[int]:
        """Gate indices from the root to key, root side first"""
        out = []
        parent, index, _ = self.visited[key]
        while parent is not None:
            out.append(index)
            parent, index, _ = self.visited[parent]
        out.reverse()
        return out


def search_decomposition(target, max_gates: int = 5) -> SearchResult | None:
    """
    Minimal-length realization of a basis-state permutation.

    Args:
        target: sequence of 4^w images (w = 1 or 2), wire 0 most significant
        max_gates: search bound (at most 6)

    Returns None when no sequence of at most max_gates gates exists.
    """
    target = np.asarray(target, dtype=np.int64)
    size = len(target)
    width = {4: 1, 16: 2}.get(size)
    if width is None:
        raise LoweringError(f"search needs a permutation of 4 or 16 states, got {size}")
    if sorted(target.tolist()) != list(range(size)):
        raise LoweringError("search target is not a permutation")
    if not 0 <= max_gates <= MAX_SEARCH_GATES:
        raise LoweringError(f"max_gates must be between 0 and {MAX_SEARCH_GATES}, got {max_gates}")

    identity = np.arange(size, dtype=np.uint8)
    target = target.astype(np.uint8)
    if np.array_equal(identity, target):
        return SearchResult((), 1, 1)

    gates = generators(width)
    tables = [gate_permutation([g], width) for g in gates]
    inverses = [np.argsort(t).astype(np.uint8) for t in tables]

    forward = _Side(identity)
    backward = _Side(target)
    while forward.depth + backward.depth < max_gates:
        if len(forward.frontier) == 0 or len(backward.frontier) == 0:
            break
        if len(forward.frontier) <= len(backward.frontier):
            meets = forward.expand(tables, backward)
        else:
            meets = backward.expand(inverses, forward)
        log(f"search: depth {forward.depth}+{backward.depth}, "
            f"{len(forward.visited)} forward / {len(backward.visited)} backward states")
        if meets:
            best = min(meets, key=lambda k: (forward.visited[k][2] + backward.visited[k][2], k))
            # the backward side records the last gate first
            sequence = forward.path(best) + list(reversed(backward.path(best)))
            return SearchResult(tuple(gates[i] for i in sequence), len(forward.visited), len(backward.visited))
    return None
