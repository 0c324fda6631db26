"""Arc diagrams of standard cycle words and their Motzkin path encodings.

Drawing nodes 1..n on a line and one arc per consecutive pair of each cycle
word (a loop for each fixed point), every node shows one of eight incident
arc shapes, read per side of the node:

* ``.``  no arc on that side
* ``>``  an arc on that side drawn pointing right
* ``<``  an arc on that side drawn pointing left
* ``=``  two arcs on that side, one in each direction

Translating shapes step-for-step gives a bicoloured Motzkin path (letters
N, S, E, F for up, down, and the two flat colours) that never takes an F
step at height zero.  ``path_preimage`` inverts that map onto a canonical
permutation, ``class_weight`` sums node weights over a full fibre, and
``contract_path``/``expand_path`` realize the length-reducing bijection that
trades the flat-at-zero restriction away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from . import perms
from .series import FREE, Bounds, MultiPoly, WeightScheme

STEP_DELTA = {"N": 1, "S": -1, "E": 0, "F": 0}

EMPTY, RIGHT, LEFT, BOTH = ".", ">", "<", "="

SHAPE_TO_STEP = {
    (EMPTY, EMPTY): "E",
    (EMPTY, RIGHT): "N",
    (EMPTY, LEFT): "F",
    (EMPTY, BOTH): "N",
    (RIGHT, EMPTY): "S",
    (RIGHT, RIGHT): "E",
    (LEFT, LEFT): "F",
    (BOTH, EMPTY): "S",
}


class NoPreimageError(ValueError):
    """Raised when a path lies outside the image of the encoding."""


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs of a cycle form in drawing order; fixed points appear as loops."""

    n: int
    arcs: tuple[tuple[int, int], ...]


def arc_diagram(cycles: perms.Cycles) -> ArcDiagram:
    """Arcs of each cycle word in order, one loop per fixed point."""
    n = sum(len(c) for c in cycles)
    if sorted(v for c in cycles for v in c) != list(range(1, n + 1)):
        raise ValueError(f"cycle words must cover 1..{n} exactly once: {cycles!r}")
    arcs: list[tuple[int, int]] = []
    for cycle in cycles:
        if len(cycle) == 1:
            arcs.append((cycle[0], cycle[0]))
        else:
            arcs.extend(zip(cycle, cycle[1:]))
    return ArcDiagram(n, tuple(arcs))


def node_shapes(diagram: ArcDiagram) -> tuple[tuple[str, str], ...]:
    """(left, right) shape of every node, indexed by node value."""
    sides: list[dict[str, set[str]]] = [
        {"left": set(), "right": set()} for _ in range(diagram.n + 1)
    ]
    for u, v in diagram.arcs:
        if u == v:
            continue
        if v > u:
            sides[u]["right"].add(RIGHT)
            sides[v]["left"].add(RIGHT)
        else:
            sides[u]["left"].add(LEFT)
            sides[v]["right"].add(LEFT)

    def collapse(marks: set[str]) -> str:
        if not marks:
            return EMPTY
        if marks == {RIGHT}:
            return RIGHT
        if marks == {LEFT}:
            return LEFT
        return BOTH

    return tuple(
        (collapse(sides[k]["left"]), collapse(sides[k]["right"]))
        for k in range(1, diagram.n + 1)
    )


def to_motzkin_path(perm: Sequence[int]) -> str:
    """Path image of a permutation via its default-convention cycle form.

    >>> to_motzkin_path((4, 7, 6, 1, 3, 8, 5, 2))
    'NNNSFESS'
    """
    cycles = perms.to_cycle_form(perm)
    steps = []
    for shape in node_shapes(arc_diagram(cycles)):
        step = SHAPE_TO_STEP.get(shape)
        if step is None:
            raise RuntimeError(f"unexpected node shape {shape!r} in {cycles!r}")
        steps.append(step)
    path = "".join(steps)
    if not is_motzkin_path(path) or has_flat_at_zero(path):
        raise RuntimeError(f"encoding produced an invalid path {path!r} for {cycles!r}")
    return path


# ---------------------------------------------------------------------------
# Paths


def heights(path: str) -> list[int]:
    """Heights before each step plus the final height (length n+1)."""
    out = [0]
    for step in path:
        if step not in STEP_DELTA:
            raise ValueError(f"unknown step letter {step!r}")
        out.append(out[-1] + STEP_DELTA[step])
    return out


def is_motzkin_path(path: str) -> bool:
    if any(step not in STEP_DELTA for step in path):
        return False
    hs = heights(path)
    return all(h >= 0 for h in hs) and hs[-1] == 0


def has_flat_at_zero(path: str) -> bool:
    hs = heights(path)
    return any(step == "F" and hs[i] == 0 for i, step in enumerate(path))


def enumerate_motzkin_paths(n: int, allow_flat_at_zero: bool = True) -> Iterator[str]:
    """All bicoloured Motzkin paths of length n, in alphabetical order."""

    def rec(prefix: list[str], h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            if h == 0:
                yield "".join(prefix)
            return
        for step in ("E", "F", "N", "S"):
            if step == "S" and h == 0:
                continue
            if step == "F" and h == 0 and not allow_flat_at_zero:
                continue
            nh = h + STEP_DELTA[step]
            if nh > remaining - 1:
                continue
            prefix.append(step)
            yield from rec(prefix, nh, remaining - 1)
            prefix.pop()

    return rec([], 0, n)


# ---------------------------------------------------------------------------
# Node weights


class NodeWeight(NamedTuple):
    """Exponents of one node's weight monomial x^first * q^(over_other+over_same)."""

    first: int
    over_other: int
    over_same: int

    def monomial(self) -> MultiPoly:
        return MultiPoly.monomial(
            {"x": self.first, "q": self.over_other + self.over_same}
        )


def node_weights(cycles: perms.Cycles) -> tuple[NodeWeight, ...]:
    """Weight exponents of every node, indexed by node value.

    ``first`` flags the head of each cycle word (fixed points included).
    The q exponents count arcs that pass over the node left to right and are
    drawn after the node is first touched, split by whether the arc belongs
    to the node's own cycle.

    >>> [w.monomial().to_text() for w in node_weights(((2, 7, 5, 3, 6, 8), (1, 4)))]
    ['x', 'q*x', 'q', '1', 'q', '1', 'q', '1']
    """
    diagram = arc_diagram(cycles)
    n = diagram.n
    cycle_of = [0] * (n + 1)
    for b, cycle in enumerate(cycles):
        for v in cycle:
            cycle_of[v] = b
    firsts = {cycle[0] for cycle in cycles}
    visit = [len(diagram.arcs)] * (n + 1)
    for d, (u, v) in enumerate(diagram.arcs):
        visit[u] = min(visit[u], d)
        visit[v] = min(visit[v], d)
    weights = []
    for k in range(1, n + 1):
        over_other = over_same = 0
        for d, (u, v) in enumerate(diagram.arcs):
            if u < k < v and d > visit[k]:
                if cycle_of[u] == cycle_of[k]:
                    over_same += 1
                else:
                    over_other += 1
        weights.append(NodeWeight(int(k in firsts), over_other, over_same))
    return tuple(weights)


def weight_product(cycles: perms.Cycles) -> MultiPoly:
    """Product of all node-weight monomials of a cycle form."""
    total_x = total_q = 0
    for w in node_weights(cycles):
        total_x += w.first
        total_q += w.over_other + w.over_same
    return MultiPoly.monomial({"x": total_x, "q": total_q})


# ---------------------------------------------------------------------------
# Preimages and class weights


def path_preimage(path: str) -> perms.Word:
    """A permutation whose path image is the given path.

    Pairs every F step with the nearest level-matched N to its left and S to
    its right; each such (N, S) bracket contributes the arc chain
    N -> S -> F_k -> ... -> F_1 over its flat steps.  The N and S steps left
    over are matched innermost-first, one arc per pair, and every E step
    becomes a fixed point.
    """
    n = len(path)
    if not is_motzkin_path(path):
        raise NoPreimageError(f"not a Motzkin path: {path!r}")
    if has_flat_at_zero(path):
        raise NoPreimageError(f"path has a flat step at height zero: {path!r}")
    hs = heights(path)
    brackets: dict[tuple[int, int], list[int]] = {}
    for pos in range(1, n + 1):
        if path[pos - 1] != "F":
            continue
        level = hs[pos - 1]
        n_pos = max(
            p for p in range(1, pos) if path[p - 1] == "N" and hs[p] == level
        )
        s_pos = min(
            p for p in range(pos + 1, n + 1) if path[p - 1] == "S" and hs[p - 1] == level
        )
        brackets.setdefault((n_pos, s_pos), []).append(pos)
    used = {p for pair in brackets for p in pair}
    successor: dict[int, int] = {}
    for (n_pos, s_pos), flats in brackets.items():
        chain = [n_pos, s_pos] + sorted(flats, reverse=True)
        for a, b in zip(chain, chain[1:]):
            successor[a] = b
    stack: list[int] = []
    for pos in range(1, n + 1):
        step = path[pos - 1]
        if pos in used or step in ("E", "F"):
            continue
        if step == "N":
            stack.append(pos)
        elif step == "S":
            successor[stack.pop()] = pos
    cycles = []
    has_pred = set(successor.values())
    for pos in range(1, n + 1):
        if path[pos - 1] == "E":
            cycles.append((pos,))
        elif pos in successor and pos not in has_pred:
            cycle = [pos]
            while cycle[-1] in successor:
                cycle.append(successor[cycle[-1]])
            cycles.append(tuple(cycle))
    return perms.perm_from_cycles(tuple(cycles), n)


def class_weight(path: str) -> MultiPoly:
    """Sum of node-weight products over all permutations mapping to the path."""
    n = len(path)
    total = MultiPoly.zero()
    for perm in perms.enumerate_permutations(n):
        if to_motzkin_path(perm) == path:
            total = total + weight_product(perms.to_cycle_form(perm))
    return total


# ---------------------------------------------------------------------------
# Step weights


def step_weights(path: str, scheme: WeightScheme) -> list[MultiPoly]:
    """Weight of each step under a scheme, taken at its start height."""
    hs = heights(path)
    return [scheme.weight(step, hs[i]) for i, step in enumerate(path)]


def path_weight(path: str, scheme: WeightScheme) -> MultiPoly:
    """Product of all step weights of a path under a scheme."""
    total = MultiPoly.const(1)
    for w in step_weights(path, scheme):
        total = total * w
    return total


# ---------------------------------------------------------------------------
# The length-reducing bijection


def contract_path(path: str) -> str:
    """Map a path with no flat step at height zero to one step shorter.

    Step k of the output depends on steps k and k+1 of the input; under the
    class scheme the output step k carries the weight of input step k+1, so
    contraction drops exactly the first input weight (always x).
    """
    n = len(path)
    if not is_motzkin_path(path) or has_flat_at_zero(path):
        raise ValueError(f"expected a Motzkin path with no flat at zero: {path!r}")
    out = []
    for k in range(n - 1):
        rises = path[k + 1] in ("E", "N")
        if path[k] in ("E", "S"):
            out.append("E" if rises else "S")
        else:
            out.append("N" if rises else "F")
    result = "".join(out)
    if not is_motzkin_path(result):
        raise RuntimeError(f"contraction of {path!r} gave an invalid path {result!r}")
    return result


def expand_path(path: str) -> str:
    """Inverse of contract_path, one step longer, never flat at height zero."""
    if not is_motzkin_path(path):
        raise NoPreimageError(f"not a Motzkin path: {path!r}")
    n = len(path)
    if n == 0:
        return "E"
    out = ["E" if path[0] in ("E", "S") else "N"]
    for k in range(1, n):
        prev_high = path[k - 1] in ("E", "N")
        cur_low = path[k] in ("E", "S")
        if prev_high:
            out.append("E" if cur_low else "N")
        else:
            out.append("S" if cur_low else "F")
    h = 0
    for step in out:
        h += STEP_DELTA[step]
    if path[n - 1] in ("E", "N"):
        if h != 0:
            raise NoPreimageError(f"no preimage ends a path after {path!r}")
        out.append("E")
    else:
        if h == 0:
            raise NoPreimageError(
                f"a preimage of {path!r} would need a flat step at height zero"
            )
        if h != 1:
            raise NoPreimageError(f"no preimage ends a path after {path!r}")
        out.append("S")
    result = "".join(out)
    if not is_motzkin_path(result) or has_flat_at_zero(result):
        raise NoPreimageError(f"path {path!r} has no valid preimage")
    return result
