"""Cartan matrices, Coxeter exponents, simple Coxeter graphs, automorphisms.

A (generalized) Cartan matrix is an integer matrix A indexed by a finite
label set S with A[s][s] = 2, A[s][t] <= 0 for s != t, and A[s][t] = 0
exactly when A[t][s] = 0.  Labels are opaque strings; their input order is
the canonical total order used for all lexicographic tie-breaking.
"""

import math
from itertools import permutations

from .errors import (
    DiagonalNotTwoError,
    NonSquareError,
    PositiveOffDiagonalError,
    TooLargeError,
    UnknownLabelError,
    ZeroAsymmetryError,
)

# Brute-force automorphism search is factorial; keep inputs tiny.
AUTOMORPHISM_CAP = 12


class IndexSet:
    """An ordered sequence of distinct generator labels."""

    __slots__ = ("labels", "position")

    def __init__(self, labels):
        labels = tuple(labels)
        if not labels:
            raise ValueError("index set must be nonempty")
        if len(set(labels)) != len(labels):
            raise ValueError("index set labels must be distinct")
        self.labels = labels
        self.position = {s: i for i, s in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.position

    def __eq__(self, other):
        return isinstance(other, IndexSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"IndexSet({list(self.labels)!r})"

    def index(self, label):
        try:
            return self.position[label]
        except KeyError:
            raise UnknownLabelError(label) from None


class CartanMatrix:
    """A validated generalized Cartan matrix over an ordered index set."""

    __slots__ = ("index_set", "entries", "_hash")

    def __init__(self, index_set, entries):
        if not isinstance(index_set, IndexSet):
            index_set = IndexSet(index_set)
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(index_set)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise NonSquareError(len(entries), len(entries[0]) if entries else 0)
        labels = index_set.labels
        for i, s in enumerate(labels):
            if entries[i][i] != 2:
                raise DiagonalNotTwoError(s, entries[i][i])
            for j, t in enumerate(labels):
                if i == j:
                    continue
                if entries[i][j] > 0:
                    raise PositiveOffDiagonalError(s, t, entries[i][j])
                if (entries[i][j] == 0) != (entries[j][i] == 0):
                    raise ZeroAsymmetryError(s, t)
        self.index_set = index_set
        self.entries = entries
        self._hash = hash((index_set.labels, entries))

    @property
    def labels(self):
        return self.index_set.labels

    def __len__(self):
        return len(self.index_set)

    def __eq__(self, other):
        return (
            isinstance(other, CartanMatrix)
            and self.index_set == other.index_set
            and self.entries == other.entries
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CartanMatrix({list(self.labels)!r}, {self.entries!r})"

    def entry(self, s, t):
        return self.entries[self.index_set.index(s)][self.index_set.index(t)]

    def is_symmetric(self):
        n = len(self)
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def to_json(self):
        return {"index_set": list(self.labels), "matrix": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data):
        return cls(IndexSet(data["index_set"]), data["matrix"])


def validate_cartan(entries, labels):
    """Validate a square integer matrix as a Cartan matrix over `labels`."""
    return CartanMatrix(IndexSet(labels), entries)


def submatrix(A, J):
    """Restrict A to the labels in J, preserving the input label order."""
    for s in J:
        A.index_set.index(s)
    keep = [s for s in A.labels if s in set(J)]
    idx = [A.index_set.index(s) for s in keep]
    rows = [[A.entries[i][j] for j in idx] for i in idx]
    return CartanMatrix(IndexSet(keep), rows)


def coxeter_exponent(A, s, t):
    """The Coxeter exponent m_st: the order of st in the Weyl group.

    Returns 1 on the diagonal, one of 2, 3, 4, 6 in the finite cases,
    and math.inf when A[s][t]*A[t][s] >= 4.
    """
    if s == t:
        A.index_set.index(s)
        return 1
    product = A.entry(s, t) * A.entry(t, s)
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    return table.get(product, math.inf)


class SimpleCoxeterGraph:
    """The underlying simple graph: edge {s,t} iff A[s][t] != 0, s != t."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        if not isinstance(vertices, IndexSet):
            vertices = IndexSet(vertices)
        self.vertices = vertices
        self.edges = frozenset(frozenset(e) for e in edges)

    def __eq__(self, other):
        return (
            isinstance(other, SimpleCoxeterGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def has_edge(self, s, t):
        return frozenset((s, t)) in self.edges

    def degree(self, s):
        return sum(1 for e in self.edges if s in e)


def simple_graph(A):
    labels = A.labels
    edges = set()
    for i, s in enumerate(labels):
        for j in range(i + 1, len(labels)):
            if A.entries[i][j] != 0:
                edges.add(frozenset((s, labels[j])))
    return SimpleCoxeterGraph(A.index_set, edges)


def _check_cap(n):
    if n > AUTOMORPHISM_CAP:
        raise TooLargeError(n, AUTOMORPHISM_CAP)


def graph_automorphisms(G):
    """All vertex bijections preserving edges, in lexicographic order.

    The order is lexicographic in the image tuple relative to the input
    vertex order, so the identity always comes first.
    """
    labels = G.vertices.labels
    _check_cap(len(labels))
    autos = []
    for images in permutations(labels):
        sigma = dict(zip(labels, images))
        if all(G.has_edge(sigma[s], sigma[t]) == G.has_edge(s, t)
               for i, s in enumerate(labels) for t in labels[i + 1:]):
            autos.append(sigma)
    return autos


def diagram_automorphisms(A):
    """All vertex bijections preserving every Cartan entry, lexicographically."""
    labels = A.labels
    _check_cap(len(labels))
    pos = A.index_set.position
    autos = []
    for images in permutations(labels):
        sigma = dict(zip(labels, images))
        if all(
            A.entries[pos[s]][pos[t]] == A.entries[pos[sigma[s]]][pos[sigma[t]]]
            for s in labels
            for t in labels
        ):
            autos.append(sigma)
    return autos
