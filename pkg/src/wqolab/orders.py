"""Finite quasi-orders and the standard constructions on them.

A quasi-order is stored extensionally: a tuple of element identifiers plus
the full set of related pairs.  Reflexivity and transitivity are validated
at construction time, never assumed.  All values are immutable and all
operations are pure, so everything here is safe to share across threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import DomainError, ParseError

Pair = tuple[int, int]
#: A finite sequence over a quasi-order's elements.
FiniteSeq = tuple[int, ...]


def transitive_closure(pairs: set[Pair]) -> set[Pair]:
    closed = set(pairs)
    succs: dict[int, set[int]] = {}
    for a, b in closed:
        succs.setdefault(a, set()).add(b)
    changed = True
    while changed:
        changed = False
        for a, bs in list(succs.items()):
            extra = set()
            for b in bs:
                extra |= succs.get(b, set())
            if not extra <= bs:
                succs[a] = bs | extra
                changed = True
    return {(a, b) for a, bs in succs.items() for b in bs}


@dataclass(frozen=True)
class FiniteQO:
    """A finite quasi-order: element identifiers plus an explicit relation."""

    elements: tuple[int, ...]
    pairs: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise DomainError("duplicate element identifiers")
        if any(e < 0 for e in elems):
            raise DomainError("element identifiers must be nonnegative")
        for a, b in self.pairs:
            if a not in elems or b not in elems:
                raise DomainError(f"relation pair ({a}, {b}) mentions a non-element")
        for e in elems:
            if (e, e) not in self.pairs:
                raise DomainError(f"relation is not reflexive at {e}")
        for a, b in self.pairs:
            for c in self.elements:
                if (b, c) in self.pairs and (a, c) not in self.pairs:
                    raise DomainError(f"relation is not transitive: {a}<={b}<={c} but not {a}<={c}")

    @classmethod
    def from_relation(cls, elements: Iterable[int], pairs: Iterable[Pair], close: bool = False) -> "FiniteQO":
        """Build a quasi-order; with ``close=True`` the reflexive-transitive
        closure of ``pairs`` is taken instead of validating them as-is."""
        elements = tuple(elements)
        pairs = set(map(tuple, pairs))
        if close:
            pairs |= {(e, e) for e in elements}
            pairs = transitive_closure(pairs)
        return cls(elements, frozenset(pairs))

    @classmethod
    def chain(cls, n: int) -> "FiniteQO":
        """The linear order 0 < 1 < ... < n-1."""
        return cls(tuple(range(n)), frozenset((a, b) for a in range(n) for b in range(a, n)))

    @classmethod
    def equality(cls, n: int) -> "FiniteQO":
        """n pairwise-incomparable elements, i.e. the order is equality."""
        return cls(tuple(range(n)), frozenset((a, a) for a in range(n)))

    def check_element(self, a: int) -> int:
        if a not in set(self.elements):
            raise DomainError(f"unknown element identifier {a}")
        return a

    def leq(self, a: int, b: int) -> bool:
        self.check_element(a)
        self.check_element(b)
        return (a, b) in self.pairs

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)


def check_sequence(order: FiniteQO, xs: Sequence[int]) -> FiniteSeq:
    elems = set(order.elements)
    for x in xs:
        if x not in elems:
            raise DomainError(f"unknown element identifier {x}")
    return tuple(xs)


def dominated_subsequence(s: Sequence, t: Sequence, leq: Callable) -> bool:
    """Greedy leftmost matching for the subsequence-domination order.

    Matches each item of ``s`` against the earliest unused position of ``t``
    whose item dominates it.  Correct by the usual exchange argument, and
    O(len(s) * len(t)) calls to ``leq``.
    """
    j = 0
    for item in s:
        while j < len(t) and not leq(item, t[j]):
            j += 1
        if j == len(t):
            return False
        j += 1
    return True


def seq_embed(order: FiniteQO, s: Sequence[int], t: Sequence[int]) -> bool:
    """Subsequence embedding of ``s`` into ``t`` with elementwise domination."""
    s = check_sequence(order, s)
    t = check_sequence(order, t)
    return dominated_subsequence(s, t, lambda a, b: (a, b) in order.pairs)


def product(p: FiniteQO, q: FiniteQO) -> FiniteQO:
    """Componentwise product order.

    The pair at position ``(i, j)`` of ``p.elements`` x ``q.elements`` gets
    the dense identifier ``i * len(q.elements) + j``.
    """
    nq = len(q.elements)
    pos_p = {e: i for i, e in enumerate(p.elements)}
    pos_q = {e: j for j, e in enumerate(q.elements)}
    elements = tuple(range(len(p.elements) * nq))
    pairs = frozenset(
        (pos_p[a1] * nq + pos_q[b1], pos_p[a2] * nq + pos_q[b2])
        for (a1, a2) in p.pairs
        for (b1, b2) in q.pairs
    )
    return FiniteQO(elements, pairs)


def disjoint_union(p: FiniteQO, q: FiniteQO) -> FiniteQO:
    """Tagged union; elements of different components are incomparable.

    Identifiers are renumbered by position: ``p`` keeps 0..len(p)-1 and
    ``q`` is shifted up by len(p).
    """
    np_ = len(p.elements)
    pos_p = {e: i for i, e in enumerate(p.elements)}
    pos_q = {e: j for j, e in enumerate(q.elements)}
    elements = tuple(range(np_ + len(q.elements)))
    pairs = {(pos_p[a], pos_p[b]) for a, b in p.pairs}
    pairs |= {(np_ + pos_q[a], np_ + pos_q[b]) for a, b in q.pairs}
    return FiniteQO(elements, frozenset(pairs))


def closure(order: FiniteQO, b: Iterable[int]) -> frozenset[int]:
    """Upward closure {q : some element of b is <= q}."""
    b = [order.check_element(x) for x in b]
    return frozenset(q for q in order.elements if any((x, q) in order.pairs for x in b))


def is_antichain(order: FiniteQO, xs: Sequence[int]) -> bool:
    """True iff all distinct-index items are incomparable both ways."""
    xs = check_sequence(order, xs)
    for i in range(len(xs)):
        for j in range(len(xs)):
            if i != j and (xs[i], xs[j]) in order.pairs:
                return False
    return True


def find_good_pair(order: FiniteQO, xs: Sequence[int]) -> Optional[Pair]:
    """Least (j, then i) pair of indices i < j with xs[i] <= xs[j]."""
    xs = check_sequence(order, xs)
    for j in range(1, len(xs)):
        for i in range(j):
            if (xs[i], xs[j]) in order.pairs:
                return (i, j)
    return None


def linear_extension(order: FiniteQO) -> FiniteSeq:
    """A total order of the mutual-comparability classes, consistent with <=.

    Classes are represented by their least element identifier; ties between
    simultaneously available classes break toward the least representative,
    so the output is deterministic.
    """
    reps = {}
    for e in order.elements:
        cls = [x for x in order.elements if (e, x) in order.pairs and (x, e) in order.pairs]
        reps[e] = min(cls)
    rep_list = sorted(set(reps.values()))
    below = {
        r: {s for s in rep_list if s != r and (s, r) in order.pairs}
        for r in rep_list
    }
    indegree = {r: len(below[r]) for r in rep_list}
    ready = [r for r in rep_list if indegree[r] == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        r = heapq.heappop(ready)
        out.append(r)
        for s in rep_list:
            if r in below[s]:
                indegree[s] -= 1
                if indegree[s] == 0:
                    heapq.heappush(ready, s)
    return tuple(out)


@dataclass(frozen=True)
class OrderMap:
    """A total map between two finite quasi-orders."""

    domain: FiniteQO
    codomain: FiniteQO
    table: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "table", dict(self.table))
        missing = set(self.domain.elements) - set(self.table)
        if missing:
            raise DomainError(f"map is not total; missing {sorted(missing)}")
        for value in self.table.values():
            self.codomain.check_element(value)

    def __call__(self, a: int) -> int:
        self.domain.check_element(a)
        return self.table[a]


def check_order_preserving(m: OrderMap) -> bool:
    return all((m.table[a], m.table[b]) in m.codomain.pairs for a, b in m.domain.pairs)


def check_order_reflecting(m: OrderMap) -> bool:
    for a in m.domain.elements:
        for b in m.domain.elements:
            if (m.table[a], m.table[b]) in m.codomain.pairs and (a, b) not in m.domain.pairs:
                return False
    return True


# --- text format ------------------------------------------------------------
#
# One `elements:` header naming the elements, then one relation pair per
# line as `a <= b`.  Listed pairs are generators: the parser adds the
# reflexive-transitive closure.

def parse_qo(text: str) -> tuple[FiniteQO, dict[str, int]]:
    names: dict[str, int] = {}
    pairs: set[Pair] = set()
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("elements:"):
            if saw_header:
                raise ParseError("duplicate elements: header", line=lineno)
            saw_header = True
            for token in line[len("elements:"):].split():
                if not token.isalnum():
                    raise ParseError(f"bad element name {token!r}", line=lineno)
                if token in names:
                    raise ParseError(f"duplicate element name {token!r}", line=lineno)
                names[token] = len(names)
            continue
        if "<=" not in line:
            raise ParseError("expected `a <= b`", line=lineno)
        left, _, right = line.partition("<=")
        left, right = left.strip(), right.strip()
        for token in (left, right):
            if token not in names:
                raise ParseError(f"unknown element name {token!r}", line=lineno)
        pairs.add((names[left], names[right]))
    if not saw_header:
        raise ParseError("missing elements: header", line=1)
    order = FiniteQO.from_relation(range(len(names)), pairs, close=True)
    return order, names


def format_qo(order: FiniteQO, names: Mapping[int, str] | None = None) -> str:
    label = (lambda e: names[e]) if names is not None else str
    lines = ["elements: " + " ".join(label(e) for e in order.elements)]
    for a, b in sorted(order.pairs):
        if a != b:
            lines.append(f"{label(a)} <= {label(b)}")
    return "\n".join(lines) + "\n"
