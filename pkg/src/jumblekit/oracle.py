"""Brute-force edit-distance oracles.

These exist to cross-check the dynamic-programming metrics in `distance`
by a structurally different route, so a bug in one side cannot hide in the
other. They are exponential and only meant for short strings and small caps.

Two search styles are used:

* Levenshtein / Damerau-Levenshtein / Hamming: breadth-first search over the
  raw string graph, applying every legal single edit at every position.
* OSA: depth-first enumeration of alignment scripts with an increasing cost
  budget. A script consumes the source and target left to right (match,
  substitute, delete, insert, or transpose two adjacent characters), which
  is exactly the "no substring edited twice" restriction.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .distance import Metric

MAX_CAP = 4
MAX_LEN = 8


def oracle_distance(a: str, b: str, metric: Metric, cap: int = MAX_CAP) -> int | None:
    """Exact minimum edit count by exhaustive search, or None beyond `cap`.

    Restricted to short inputs (len <= 8) and small caps (<= 4); the search
    is exponential and anything larger is a misuse.
    """
    if cap < 0 or cap > MAX_CAP:
        raise ValueError(f"cap must be between 0 and {MAX_CAP}, got {cap}")
    if len(a) > MAX_LEN or len(b) > MAX_LEN:
        raise ValueError(f"oracle inputs must be at most {MAX_LEN} characters")
    if metric is Metric.HAMMING and len(a) != len(b):
        raise ValueError(
            f"hamming distance needs equal lengths, got {len(a)} and {len(b)}"
        )
    if a == b:
        return 0
    if metric is Metric.OSA:
        return _osa_script_search(a, b, cap)
    alphabet = sorted(set(a) | set(b))
    return _string_bfs(a, b, metric, cap, alphabet)


def _successors(s: str, alphabet: Iterable[str], transpositions: bool, subs_only: bool, max_len: int):
    n = len(s)
    for i in range(n):
        for c in alphabet:
            if c != s[i]:
                yield s[:i] + c + s[i + 1 :]
    if subs_only:
        return
    for i in range(n):
        yield s[:i] + s[i + 1 :]
    if n < max_len:
        for i in range(n + 1):
            for c in alphabet:
                yield s[:i] + c + s[i:]
    if transpositions:
        for i in range(n - 1):
            if s[i] != s[i + 1]:
                yield s[:i] + s[i + 1] + s[i] + s[i + 2 :]


def _string_bfs(a: str, b: str, metric: Metric, cap: int, alphabet: list[str]) -> int | None:
    # payloads outside the two strings' alphabets can never appear in b, so
    # restricting inserts/substitutes to it does not change the minimum
    transpositions = metric is Metric.DAMERAU_LEVENSHTEIN
    subs_only = metric is Metric.HAMMING
    max_len = max(len(a), len(b)) + cap
    seen = {a}
    frontier = [a]
    depth = 0
    while frontier and depth < cap:
        depth += 1
        nxt = []
        for s in frontier:
            for t in _successors(s, alphabet, transpositions, subs_only, max_len):
                if t == b:
                    return depth
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return None


def _osa_script_search(a: str, b: str, cap: int) -> int | None:
    la, lb = len(a), len(b)

    def feasible(i: int, j: int, budget: int) -> bool:
        if budget < abs((la - i) - (lb - j)):
            return False
        if i == la and j == lb:
            return True
        if i < la and j < lb:
            if a[i] == b[j] and feasible(i + 1, j + 1, budget):
                return True
            if budget:
                if a[i] != b[j] and feasible(i + 1, j + 1, budget - 1):
                    return True
                if (
                    i + 1 < la
                    and j + 1 < lb
                    and a[i] == b[j + 1]
                    and a[i + 1] == b[j]
                    and a[i] != a[i + 1]
                    and feasible(i + 2, j + 2, budget - 1)
                ):
                    return True
        if budget:
            if i < la and feasible(i + 1, j, budget - 1):
                return True
            if j < lb and feasible(i, j + 1, budget - 1):
                return True
        return False

    for d in range(cap + 1):
        if feasible(0, 0, d):
            return d
    return None


class EditUniverse:
    """All strings up to `max_len` over a tiny alphabet, with precomputed
    single-edit adjacency, for exhaustive oracle-vs-DP sweeps.

    One BFS from a source yields oracle distances to every string in the
    universe at once, which keeps full sweeps (thousands of pairs) cheap.
    """

    def __init__(self, alphabet: str, max_len: int):
        if len(set(alphabet)) > 4 or max_len > MAX_LEN:
            raise ValueError("universe would be too large to enumerate")
        self.alphabet = sorted(set(alphabet))
        self.max_len = max_len
        self.strings: list[str] = [""]
        for n in range(1, max_len + 1):
            self.strings.extend(
                "".join(p) for p in itertools.product(self.alphabet, repeat=n)
            )
        self.index = {s: i for i, s in enumerate(self.strings)}
        self._adjacency: dict[Metric, list[list[int]]] = {}

    def _adjacency_for(self, metric: Metric) -> list[list[int]]:
        if metric is Metric.OSA:
            raise ValueError("OSA uses the script-search oracle, not the string graph")
        if metric not in self._adjacency:
            transpositions = metric is Metric.DAMERAU_LEVENSHTEIN
            subs_only = metric is Metric.HAMMING
            adj = []
            for s in self.strings:
                succ = set(
                    _successors(s, self.alphabet, transpositions, subs_only, self.max_len)
                )
                adj.append(sorted(self.index[t] for t in succ))
            self._adjacency[metric] = adj
        return self._adjacency[metric]

    def distances_from(self, source: str, metric: Metric, cap: int = MAX_CAP) -> dict[str, int]:
        """Map every universe string reachable within `cap` edits to its
        exact edit count from `source`."""
        adj = self._adjacency_for(metric)
        src = self.index[source]
        dist = {src: 0}
        frontier = [src]
        depth = 0
        while frontier and depth < cap:
            depth += 1
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in dist:
                        dist[v] = depth
                        nxt.append(v)
            frontier = nxt
        return {self.strings[i]: d for i, d in dist.items()}
