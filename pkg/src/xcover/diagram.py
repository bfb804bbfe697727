"""Zero-suppressed decision diagrams over row variables.

A node denotes a family of sets of row ids:

* ``BOTTOM``      -> the empty family
* ``TOP``         -> { {} }
* literal v       -> { {v} }
* decision (v, pos, neg)
                  -> join({{v}}, pos) union neg, with v not occurring
                     in pos or neg
* decomposable (n1, ..., nk)
                  -> the orthogonal join of the children's families;
                     children mention pairwise disjoint variables

When every decision node's positive branch avoids v everywhere below,
the diagram restricted to decision nodes is a ZBDD; allowing
decomposable conjunction nodes gives zero-suppressed decision-DNNF.
Counting and set enumeration are linear passes because branches and
children never share variables at a node.

Nodes are hash-consed in a NodeStore, so structural equality is id
equality and shared subproblems cost one node.  Construction applies
the zero-suppression rules:

* decision with pos == BOTTOM     -> neg
* decision (v, TOP, BOTTOM)       -> literal v
* decomposable: BOTTOM child kills the node, TOP children drop out,
  nested decomposables flatten, 0 children -> TOP, 1 child -> itself
"""

from __future__ import annotations

import heapq
import threading
from bisect import insort

NodeId = int

BOTTOM: NodeId = 0
TOP: NodeId = 1

_B = "B"   # bottom
_T = "T"   # top
_L = "L"   # literal        ('L', var)
_D = "D"   # decision       ('D', var, pos, neg)
_X = "X"   # decomposable   ('X', children-tuple)


class NodeStore:
    """Arena of hash-consed diagram nodes.

    Thread safe for concurrent construction: interning takes a lock.
    Queries (count, enumerate, node_count, ...) are meant for a
    quiescent store.
    """

    def __init__(self):
        self._entries = [(_B,), (_T,)]
        self._vars = [frozenset(), frozenset()]
        self._unique = {(_B,): BOTTOM, (_T,): TOP}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def kind(self, n: NodeId) -> str:
        return self._entries[n][0]

    def entry(self, n: NodeId) -> tuple:
        return self._entries[n]

    def variables(self, n: NodeId) -> frozenset:
        """Set of row variables occurring anywhere under ``n``."""
        return self._vars[n]

    def _intern(self, key: tuple, varset: frozenset) -> NodeId:
        with self._lock:
            n = self._unique.get(key)
            if n is None:
                n = len(self._entries)
                self._entries.append(key)
                self._vars.append(varset)
                self._unique[key] = n
            return n

    # -- constructors -------------------------------------------------------

    def mk_literal(self, var: int) -> NodeId:
        return self._intern((_L, var), frozenset((var,)))

    def mk_decision(self, var: int, pos: NodeId, neg: NodeId) -> NodeId:
        if pos == BOTTOM:
            return neg
        if var in self._vars[pos] or var in self._vars[neg]:
            raise ValueError(f"decision variable {var} occurs in a branch")
        if pos == TOP and neg == BOTTOM:
            return self.mk_literal(var)
        vs = self._vars[pos] | self._vars[neg] | {var}
        return self._intern((_D, var, pos, neg), vs)

    def mk_decomposable(self, children) -> NodeId:
        kept = []
        for ch in children:
            if ch == BOTTOM:
                return BOTTOM
            if ch == TOP:
                continue
            if self._entries[ch][0] == _X:
                kept.extend(self._entries[ch][1])
            else:
                kept.append(ch)
        if not kept:
            return TOP
        if len(kept) == 1:
            return kept[0]
        kept.sort()
        vs = frozenset()
        total = 0
        for ch in kept:
            cv = self._vars[ch]
            total += len(cv)
            vs |= cv
        if len(vs) != total:
            raise ValueError("decomposable children share variables")
        return self._intern((_X, tuple(kept)), vs)

    # -- queries ------------------------------------------------------------

    def count(self, n: NodeId) -> int:
        """Number of sets in the family of ``n`` (exact bignum)."""
        memo = {BOTTOM: 0, TOP: 1}
        stack = [n]
        while stack:
            m = stack[-1]
            if m in memo:
                stack.pop()
                continue
            e = self._entries[m]
            if e[0] == _L:
                memo[m] = 1
                stack.pop()
            elif e[0] == _D:
                ready = True
                for ch in (e[2], e[3]):
                    if ch not in memo:
                        stack.append(ch)
                        ready = False
                if ready:
                    memo[m] = memo[e[2]] + memo[e[3]]
                    stack.pop()
            else:
                ready = True
                for ch in e[1]:
                    if ch not in memo:
                        stack.append(ch)
                        ready = False
                if ready:
                    p = 1
                    for ch in e[1]:
                        p *= memo[ch]
                    memo[m] = p
                    stack.pop()
        return memo[n]

    def reachable(self, n: NodeId) -> set:
        """Ids of all nodes under ``n``, terminals included."""
        seen = set()
        stack = [n]
        while stack:
            m = stack.pop()
            if m in seen:
                continue
            seen.add(m)
            e = self._entries[m]
            if e[0] == _D:
                stack.append(e[2])
                stack.append(e[3])
            elif e[0] == _X:
                stack.extend(e[1])
        return seen

    def node_count(self, n: NodeId) -> int:
        """Number of distinct nodes reachable from ``n``, terminals
        included; node_count(TOP) == 1."""
        return len(self.reachable(n))

    def iter_members(self, n: NodeId):
        """Yield the sets of the family of ``n`` as sorted tuples of row
        ids, in lexicographic order.

        The order guarantee assumes every node's family is an antichain
        (no member contains another), which holds for any diagram built
        by the cover engines: all members of a node cover the same
        column set, and rows are non-empty.  Hand-built diagrams that
        break this still yield every member exactly once, but possibly
        out of order.
        """
        return _Stream(self, n, {}).__iter__()

    def enumerate(self, n: NodeId, limit=None) -> list:
        out = []
        if limit is not None and limit <= 0:
            return out
        for t in self.iter_members(n):
            out.append(t)
            if limit is not None and len(out) >= limit:
                break
        return out

    def validate(self, n: NodeId):
        """Check structural invariants under ``n``; raises on violation."""
        for m in self.reachable(n):
            e = self._entries[m]
            if e[0] == _D:
                _, v, pos, neg = e
                if pos == BOTTOM:
                    raise AssertionError(f"node {m}: positive branch is BOTTOM")
                if v in self._vars[pos] or v in self._vars[neg]:
                    raise AssertionError(f"node {m}: {v} occurs in a branch")
                if self._vars[m] != self._vars[pos] | self._vars[neg] | {v}:
                    raise AssertionError(f"node {m}: stale variable set")
            elif e[0] == _X:
                ch = e[1]
                if len(ch) < 2:
                    raise AssertionError(f"node {m}: trivial decomposable")
                vs = frozenset()
                for c in ch:
                    if c in (BOTTOM, TOP) or self._entries[c][0] == _X:
                        raise AssertionError(f"node {m}: non-canonical child {c}")
                    if vs & self._vars[c]:
                        raise AssertionError(f"node {m}: children share variables")
                    vs |= self._vars[c]
                if self._vars[m] != vs:
                    raise AssertionError(f"node {m}: stale variable set")

    def check_canonical(self):
        """Scan the whole store (not just one root) for canonicity:
        unique table bijective, no decision with a BOTTOM positive
        branch, decision variables absent from branches, decomposable
        nodes well formed.  Raises AssertionError on violation."""
        if len(self._unique) != len(self._entries):
            raise AssertionError("unique table out of sync with arena")
        seen = set()
        for m, e in enumerate(self._entries):
            if e in seen:
                raise AssertionError(f"duplicate structural node {e}")
            seen.add(e)
            if self._unique.get(e) != m:
                raise AssertionError(f"unique table misses node {m}")
            if e[0] == _D:
                _, v, pos, neg = e
                if pos == BOTTOM:
                    raise AssertionError(f"node {m}: positive branch is BOTTOM")
                if v in self._vars[pos] or v in self._vars[neg]:
                    raise AssertionError(f"node {m}: {v} occurs in a branch")
            elif e[0] == _X:
                ch = e[1]
                if len(ch) < 2 or list(ch) != sorted(ch):
                    raise AssertionError(f"node {m}: malformed decomposable")
                vs = frozenset()
                for c in ch:
                    if c in (BOTTOM, TOP) or self._entries[c][0] == _X:
                        raise AssertionError(f"node {m}: non-canonical child {c}")
                    if vs & self._vars[c]:
                        raise AssertionError(f"node {m}: children share variables")
                    vs |= self._vars[c]

    # -- serialization ------------------------------------------------------

    def dump(self, n: NodeId) -> str:
        """Textual form of the diagram under ``n``, children before
        parents, root last.  Lines: ``id B|T``, ``id L <var>``,
        ``id D <var> <pos> <neg>``, ``id X <child>...``."""
        order = []
        seen = set()
        stack = [(n, False)]
        while stack:
            m, done = stack.pop()
            if done:
                order.append(m)
                continue
            if m in seen:
                continue
            seen.add(m)
            stack.append((m, True))
            e = self._entries[m]
            if e[0] == _D:
                stack.append((e[3], False))
                stack.append((e[2], False))
            elif e[0] == _X:
                for ch in reversed(e[1]):
                    stack.append((ch, False))
        lines = []
        for m in order:
            e = self._entries[m]
            if e[0] in (_B, _T):
                lines.append(f"{m} {e[0]}")
            elif e[0] == _L:
                lines.append(f"{m} L {e[1]}")
            elif e[0] == _D:
                lines.append(f"{m} D {e[1]} {e[2]} {e[3]}")
            else:
                lines.append(f"{m} X " + " ".join(map(str, e[1])))
        return "\n".join(lines) + "\n"

    def export_dot(self, n: NodeId, var_names=None) -> str:
        """Graphviz source.  Decision nodes show their variable with a
        solid edge to the positive branch and a dashed edge to the
        negative; decomposable nodes are triangles; terminals boxes."""
        def name(v):
            return str(var_names[v]) if var_names is not None else str(v)
        lines = ["digraph diagram {"]
        for m in sorted(self.reachable(n)):
            e = self._entries[m]
            if e[0] == _B:
                lines.append(f'  n{m} [shape=box, label="0"];')
            elif e[0] == _T:
                lines.append(f'  n{m} [shape=box, label="1"];')
            elif e[0] == _L:
                lines.append(f'  n{m} [shape=oval, label="{name(e[1])}"];')
            elif e[0] == _D:
                lines.append(f'  n{m} [shape=oval, label="{name(e[1])}"];')
                lines.append(f"  n{m} -> n{e[2]};")
                lines.append(f"  n{m} -> n{e[3]} [style=dashed];")
            else:
                lines.append(f'  n{m} [shape=triangle, label="&#x2294;"];')
                for ch in e[1]:
                    lines.append(f"  n{m} -> n{ch};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def load_dump(text: str):
    """Rebuild a diagram from NodeStore.dump output.

    Returns ``(store, root, id_map)`` where id_map sends dumped ids to
    ids in the fresh store.
    """
    store = NodeStore()
    id_map = {}
    root = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        old = int(parts[0])
        kind = parts[1]
        if kind == _B:
            new = BOTTOM
        elif kind == _T:
            new = TOP
        elif kind == _L:
            new = store.mk_literal(int(parts[2]))
        elif kind == _D:
            new = store.mk_decision(
                int(parts[2]), id_map[int(parts[3])], id_map[int(parts[4])])
        elif kind == _X:
            new = store.mk_decomposable([id_map[int(p)] for p in parts[2:]])
        else:
            raise ValueError(f"bad dump line: {raw!r}")
        id_map[old] = new
        root = new
    if root is None:
        raise ValueError("empty dump")
    return store, root, id_map


class _Stream:
    """Lazy, memoized, lexicographically sorted view of a node's family.

    One _Stream exists per node per enumeration call (``cache`` maps
    node id to stream); iterators over the same stream share the
    growing ``items`` buffer, so diamonds in the diagram are expanded
    once.  Decision nodes merge two sorted streams; decomposable nodes
    run a heap-based product over their children.  Order is preserved
    under inserting the decision variable because distinct sets of a
    family are never related by prefix order here: the families denoted
    by diagram nodes built from exact covers are antichains (each set
    covers the same column set, so none strictly contains another).
    """

    def __init__(self, store: NodeStore, n: NodeId, cache: dict):
        self.items = []
        self.done = False
        e = store.entry(n)
        k = e[0]
        if k == _B:
            self.done = True
            self._gen = None
        elif k == _T:
            self.items.append(())
            self.done = True
            self._gen = None
        elif k == _L:
            self.items.append((e[1],))
            self.done = True
            self._gen = None
        elif k == _D:
            pos = _stream(store, e[2], cache)
            neg = _stream(store, e[3], cache)
            self._gen = _merge_decision(e[1], pos, neg)
        else:
            subs = [_stream(store, ch, cache) for ch in e[1]]
            self._gen = _product(subs)

    def _grow(self) -> bool:
        if self.done:
            return False
        try:
            self.items.append(next(self._gen))
            return True
        except StopIteration:
            self.done = True
            self._gen = None
            return False

    def __iter__(self):
        i = 0
        while True:
            while i >= len(self.items):
                if not self._grow():
                    return
            yield self.items[i]
            i += 1


def _stream(store, n, cache):
    s = cache.get(n)
    if s is None:
        s = cache[n] = _Stream(store, n, cache)
    return s


def _merge_decision(var, pos, neg):
    it_p = iter(pos)
    it_n = iter(neg)
    p = next(it_p, None)
    nn = next(it_n, None)
    while p is not None or nn is not None:
        if p is not None:
            t = list(p)
            insort(t, var)
            pt = tuple(t)
        if nn is None or (p is not None and pt <= nn):
            yield pt
            p = next(it_p, None)
        else:
            yield nn
            nn = next(it_n, None)


def _product(subs):
    """Sorted product of sorted streams of pairwise disjoint tuples.

    Concatenation-then-sort is monotone in every coordinate when the
    coordinate alphabets are disjoint, so a best-first heap over index
    vectors yields the product in lexicographic order.
    """
    k = len(subs)
    firsts = []
    for s in subs:
        it = iter(s)
        f = next(it, None)
        if f is None:
            return
        firsts.append(f)

    def at(i, j):
        s = subs[i]
        while j >= len(s.items):
            if s.done:
                return None
            if not s._grow():
                return None
        return s.items[j]

    def combine(idx):
        merged = []
        for i, j in enumerate(idx):
            merged.extend(subs[i].items[j])
        merged.sort()
        return tuple(merged)

    start = (0,) * k
    heap = [(combine(start), start)]
    seen = {start}
    while heap:
        t, idx = heapq.heappop(heap)
        yield t
        for i in range(k):
            nxt = idx[:i] + (idx[i] + 1,) + idx[i + 1:]
            if nxt in seen:
                continue
            if at(i, idx[i] + 1) is None:
                continue
            seen.add(nxt)
            heapq.heappush(heap, (combine(nxt), nxt))
