"""Finite ordered labelled trees and the inhomogeneous embedding relation.

Embedding ``t into s`` holds when one of three clauses applies: both are
leaves and the labels compare; ``t`` embeds into some immediate subtree of
``s``; or the root labels compare and the child sequences relate under
subsequence domination with embedding as the item order.  A tree with
children never embeds into a leaf: no clause covers that shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DomainError, ParseError
from .orders import FiniteQO, dominated_subsequence


@dataclass(frozen=True, eq=False)
class Tree:
    label: int
    children: tuple["Tree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        # node count and hash are cached; enumeration universes hammer both
        object.__setattr__(self, "size", 1 + sum(c.size for c in self.children))
        object.__setattr__(self, "_hash", hash((self.label, self.children)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.label == other.label
            and self.children == other.children
        )

    def __repr__(self):
        return f"Tree({format_tree(self)!r})"


def leaf(label: int) -> Tree:
    return Tree(label, ())


def degree(t: Tree) -> int:
    """Branching degree: 0 for leaves, else max of child count and child degrees."""
    if not t.children:
        return 0
    return max(len(t.children), max(degree(c) for c in t.children))


def _check_labels(order: FiniteQO, t: Tree) -> None:
    elems = set(order.elements)
    stack = [t]
    while stack:
        node = stack.pop()
        if node.label not in elems:
            raise DomainError(f"tree label {node.label} is not an element of the order")
        stack.extend(node.children)


def _embeds(t: Tree, s: Tree, pairs: frozenset, memo: dict) -> bool:
    key = (t, s)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # clause order 1, 2, 3 is an evaluation choice only; the result is the
    # same pure disjunction either way
    result = False
    if not t.children and not s.children:
        result = (t.label, s.label) in pairs
    if not result:
        for child in s.children:
            if _embeds(t, child, pairs, memo):
                result = True
                break
    if not result and (t.label, s.label) in pairs:
        result = dominated_subsequence(
            t.children, s.children, lambda a, b: _embeds(a, b, pairs, memo)
        )
    memo[key] = result
    return result


def embeds(order: FiniteQO, t: Tree, s: Tree) -> bool:
    """Tree embedding of ``t`` into ``s`` over the given label order.

    Memoizes on structural identity of subtree pairs within one query.
    """
    _check_labels(order, t)
    _check_labels(order, s)
    return _embeds(t, s, order.pairs, {})


def embedding_table(order: FiniteQO, trees: Sequence[Tree]) -> list[int]:
    """Bulk form of :func:`embeds` for a subtree-closed list of trees.

    Returns one bitmask per tree: bit ``j`` of ``rows[i]`` is set iff
    ``trees[i]`` embeds into ``trees[j]``.  Evaluates the same clauses as
    :func:`embeds` (greedy child matching included), tabulated in order of
    increasing node count so each pair is computed exactly once.
    """
    for t in trees:
        _check_labels(order, t)
    index = {}
    for i, t in enumerate(trees):
        if t in index:
            raise DomainError("duplicate tree in table input")
        index[t] = i
    labels = [t.label for t in trees]
    kids: list[tuple[int, ...]] = []
    for t in trees:
        try:
            kids.append(tuple(index[c] for c in t.children))
        except KeyError:
            raise DomainError("tree list is not closed under immediate subtrees") from None
    pairs = order.pairs
    n = len(trees)
    by_size: dict[int, list[int]] = {}
    for i, t in enumerate(trees):
        by_size.setdefault(t.size, []).append(i)
    sizes = sorted(by_size)
    rows = [0] * n
    for total in range(2, 2 * max(sizes) + 1):
        for ts in sizes:
            ss = total - ts
            if ss not in by_size:
                continue
            for ti in by_size[ts]:
                ti_kids = kids[ti]
                lt = labels[ti]
                row = rows[ti]
                for si in by_size[ss]:
                    ok = False
                    si_kids = kids[si]
                    if not ti_kids and not si_kids:
                        ok = (lt, labels[si]) in pairs
                    if not ok:
                        for cj in si_kids:
                            if (row >> cj) & 1:
                                ok = True
                                break
                    if not ok and (lt, labels[si]) in pairs:
                        j = 0
                        m = len(si_kids)
                        ok = True
                        for ci in ti_kids:
                            crow = rows[ci]
                            while j < m and not (crow >> si_kids[j]) & 1:
                                j += 1
                            if j == m:
                                ok = False
                                break
                            j += 1
                    if ok:
                        row |= 1 << si
                rows[ti] = row
    return rows


def _compositions(total: int, max_parts: int):
    """All ordered compositions of ``total`` into 1..max_parts positive parts."""
    if total == 0:
        return
    for first in range(1, total + 1):
        if first == total:
            yield (first,)
        elif max_parts > 1:
            for rest in _compositions(total - first, max_parts - 1):
                yield (first,) + rest


def enumerate_trees(labels: FiniteQO, max_nodes: int, bound: int | None = None) -> list[Tree]:
    """All trees with at most ``max_nodes`` nodes over the given labels.

    With ``bound`` set, only trees of branching degree <= bound are produced.
    Output order is canonical: by node count, then root label position, then
    child shapes lexicographically.
    """
    if max_nodes < 1:
        raise DomainError("max_nodes must be >= 1")
    if bound is not None and bound < 0:
        raise DomainError("degree bound must be >= 0")
    by_size: dict[int, list[Tree]] = {1: [leaf(e) for e in labels.elements]}
    for size in range(2, max_nodes + 1):
        level = []
        max_parts = size - 1 if bound is None else min(size - 1, bound)
        for root in labels.elements:
            for parts in _compositions(size - 1, max_parts):
                pools = [by_size[p] for p in parts]
                stack = [(0, ())]
                while stack:
                    pos, chosen = stack.pop()
                    if pos == len(pools):
                        level.append(Tree(root, chosen))
                        continue
                    for child in reversed(pools[pos]):
                        stack.append((pos + 1, chosen + (child,)))
        by_size[size] = level
    return [t for size in range(1, max_nodes + 1) for t in by_size[size]]


def is_graded(t: Tree, grade: Mapping[int, int]) -> bool:
    """True iff every node's child count equals the grade of its label."""
    stack = [t]
    while stack:
        node = stack.pop()
        if node.label not in grade:
            raise DomainError(f"no grade assigned to label {node.label}")
        if len(node.children) != grade[node.label]:
            return False
        stack.extend(node.children)
    return True


# --- text format ------------------------------------------------------------
#
# tree  := ident | ident '[' (tree (',' tree)*)? ']'
# ident := nonempty alphanumeric; whitespace between tokens is ignored.
# Leaves may be written `a` or `a[]`; the printer emits `a[]`.

def parse_tree(text: str, resolve: Callable[[str], int] | Mapping[str, int] | None = None) -> Tree:
    if isinstance(resolve, Mapping):
        table = resolve
        resolve = lambda name: table[name]

    def lookup(name: str, col: int) -> int:
        if resolve is None:
            if not name.isdigit():
                raise ParseError(f"label {name!r} is not numeric and no name table was given", column=col)
            return int(name)
        try:
            return resolve(name)
        except KeyError:
            raise ParseError(f"unknown label {name!r}", column=col) from None

    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def ident() -> tuple[str, int]:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < len(text) and text[pos].isalnum():
            pos += 1
        if pos == start:
            raise ParseError("expected a label", column=start + 1)
        return text[start:pos], start + 1

    def node() -> Tree:
        nonlocal pos
        name, col = ident()
        label = lookup(name, col)
        skip_ws()
        if pos < len(text) and text[pos] == "[":
            pos += 1
            children = []
            skip_ws()
            if pos < len(text) and text[pos] == "]":
                pos += 1
                return Tree(label, ())
            while True:
                children.append(node())
                skip_ws()
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                    continue
                if pos < len(text) and text[pos] == "]":
                    pos += 1
                    return Tree(label, tuple(children))
                raise ParseError("expected ',' or ']'", column=pos + 1)
        return Tree(label, ())

    result = node()
    skip_ws()
    if pos != len(text):
        raise ParseError("trailing input after tree", column=pos + 1)
    return result


def format_tree(t: Tree, names: Mapping[int, str] | None = None) -> str:
    label = names[t.label] if names is not None else str(t.label)
    return label + "[" + ",".join(format_tree(c, names) for c in t.children) + "]"
