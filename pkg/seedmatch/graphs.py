# -*- coding: utf-8 -*-
from __future__ import absolute_import

import io
import logging
import math

from django.core.exceptions import ValidationError

import numpy as np

from . import strings


logger = logging.getLogger(__name__)


"""
~ Conventions ~

Graphs are vertex-labelled, weighted and possibly directed or loopy; the
adjacency matrix is dense and entry (i, j) is the weight of the edge
labels[i] -> labels[j], with 0 meaning "no edge".

A seeded problem is canonicalized so that the m seeds occupy the leading
indices of both matrices, in the order the seeding lists them. The solver
only ever sees this block form; the label maps on `SeededInstance` bring
results back to the caller's vertex names.
"""


class Graph(object):
    """An immutable labelled graph with a dense adjacency matrix."""

    def __init__(self, labels, adj):
        labels = tuple(str(label) for label in labels)
        adj = np.array(adj, dtype=float)
        if len(labels) == 0:
            adj = adj.reshape(0, 0)
        if adj.ndim != 2 or adj.shape != (len(labels), len(labels)):
            raise ValidationError(strings.graph_not_square, code="dimension")
        if len(set(labels)) != len(labels):
            raise ValidationError(strings.graph_duplicate_labels, code="parse")
        adj.setflags(write=False)
        self.labels = labels
        self.adj = adj
        self._index = {label: i for i, label in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.adj, other.adj)

    __hash__ = None

    def __repr__(self):
        return "Graph(vertices={}, edges={})".format(len(self), self.edge_count)

    @property
    def edge_count(self):
        """Number of nonzero adjacency entries (ordered pairs)."""
        return int(np.count_nonzero(self.adj))

    def index(self, label):
        return self._index[label]

    def weight(self, u, v):
        return float(self.adj[self._index[u], self._index[v]])

    def subgraph(self, labels):
        """The induced subgraph on `labels`, in the order given."""
        idx = [self._index[label] for label in labels]
        return Graph([self.labels[i] for i in idx], self.adj[np.ix_(idx, idx)])

    def is_simple(self):
        """Binary, symmetric and hollow: the simple undirected graph convention."""
        adj = self.adj
        return bool(
            np.all((adj == 0) | (adj == 1))
            and np.array_equal(adj, adj.T)
            and not np.any(np.diag(adj))
        )


class SeedSpec(object):
    """
    The seeding: a partial bijection from labels of G1 to labels of G2.

    Pairs keep the order they were given in; that order decides the internal
    seed indices after canonicalization.
    """

    def __init__(self, pairs=()):
        self.pairs = tuple((str(u), str(v)) for u, v in pairs)
        for position, graph in ((0, "G1"), (1, "G2")):
            seen = set()
            for pair in self.pairs:
                label = pair[position]
                if label in seen:
                    raise ValidationError(
                        strings.seed_duplicate_label,
                        code="seed",
                        params={"label": label, "graph": graph},
                    )
                seen.add(label)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, SeedSpec):
            return NotImplemented
        return self.pairs == other.pairs

    __hash__ = None

    def __repr__(self):
        return "SeedSpec(m={})".format(self.m)

    @property
    def m(self):
        return len(self.pairs)

    @property
    def domain(self):
        return [u for u, _v in self.pairs]

    def as_dict(self):
        return dict(self.pairs)

    def validate(self, g1, g2):
        for u, v in self.pairs:
            if u not in g1:
                raise ValidationError(
                    strings.seed_unknown_label,
                    code="seed",
                    params={"label": u, "graph": "G1"},
                )
            if v not in g2:
                raise ValidationError(
                    strings.seed_unknown_label,
                    code="seed",
                    params={"label": v, "graph": "G2"},
                )


class SeededInstance(object):
    """
    A canonical seeded problem: seeds first, psi the identity on 0..m-1.

    The partition blocks are views by offset, e.g. `A12` is A[:m, m:].
    """

    def __init__(self, A, B, m, labels1, labels2):
        self.A = A
        self.B = B
        self.m = m
        self.n = A.shape[0] - m
        self.labels1 = tuple(labels1)
        self.labels2 = tuple(labels2)

    def __repr__(self):
        return "SeededInstance(m={}, n={})".format(self.m, self.n)

    @property
    def A11(self):
        return self.A[: self.m, : self.m]

    @property
    def A12(self):
        return self.A[: self.m, self.m :]

    @property
    def A21(self):
        return self.A[self.m :, : self.m]

    @property
    def A22(self):
        return self.A[self.m :, self.m :]

    @property
    def B11(self):
        return self.B[: self.m, : self.m]

    @property
    def B12(self):
        return self.B[: self.m, self.m :]

    @property
    def B21(self):
        return self.B[self.m :, : self.m]

    @property
    def B22(self):
        return self.B[self.m :, self.m :]


# ingestion and simplification


def _iter_records(text):
    """Yield (line number, tokens) for each non-blank, non-comment line."""
    if isinstance(text, str):
        text = io.StringIO(text)
    for line_no, line in enumerate(text, 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield line_no, line.split()


def _parse_weight(token, line_no):
    try:
        weight = float(token)
    except ValueError:
        weight = math.nan
    if not math.isfinite(weight):
        raise ValidationError(
            strings.graph_weight_error,
            code="parse",
            params={"line": line_no, "weight": token},
        )
    return weight


def load_edge_list(text):
    """
    Parse an edge list into a `Graph`.

    Lines are "u v" (weight 1) or "u v w"; '#' starts a comment. Vertices
    are numbered in order of first appearance and a repeated (u, v) keeps the
    last weight seen.
    """
    labels = {}
    weights = {}
    for line_no, tokens in _iter_records(text):
        if len(tokens) not in (2, 3):
            raise ValidationError(
                strings.graph_parse_error,
                code="parse",
                params={"line": line_no, "text": " ".join(tokens)},
            )
        u, v = tokens[0], tokens[1]
        weight = _parse_weight(tokens[2], line_no) if len(tokens) == 3 else 1.0
        for label in (u, v):
            labels.setdefault(label, len(labels))
        weights[(labels[u], labels[v])] = weight

    if not labels:
        raise ValidationError(strings.graph_empty, code="empty_graph")

    adj = np.zeros((len(labels), len(labels)))
    for (i, j), weight in weights.items():
        adj[i, j] = weight
    logger.debug("Loaded edge list with %d vertices", len(labels))
    return Graph(list(labels), adj)


def dump_edge_list(graph):
    """
    Render `graph` in the edge-list format such that `load_edge_list` gives it
    back unchanged.

    When the plain edge listing would lose a vertex (isolated) or change the
    first-appearance order, every vertex is declared up front with a
    zero-weight self-loop; real loops listed later overwrite those.
    """
    rows, cols = np.nonzero(graph.adj)
    lines = []
    seen = {}
    for i, j in zip(rows, cols):
        seen.setdefault(i, len(seen))
        seen.setdefault(j, len(seen))
    if list(seen) != list(range(len(graph))):
        lines.extend("{0} {0} 0".format(label) for label in graph.labels)
    for i, j in zip(rows, cols):
        weight = float(graph.adj[i, j])
        if weight == 1.0:
            lines.append("{} {}".format(graph.labels[i], graph.labels[j]))
        else:
            lines.append("{} {} {!r}".format(graph.labels[i], graph.labels[j], weight))
    return "".join(line + "\n" for line in lines)


def _load_pairs(text):
    pairs = []
    for line_no, tokens in _iter_records(text):
        if len(tokens) != 2:
            raise ValidationError(
                strings.graph_parse_error,
                code="parse",
                params={"line": line_no, "text": " ".join(tokens)},
            )
        pairs.append((tokens[0], tokens[1]))
    return pairs


def load_seeds(text):
    """Parse a seed file: "u v" lines meaning psi(u) = v."""
    return SeedSpec(_load_pairs(text))


def dump_seeds(seeds):
    return "".join("{} {}\n".format(u, v) for u, v in seeds)


def load_correspondence(text):
    """Parse a ground-truth correspondence file (same format as seeds)."""
    # the SeedSpec constructor enforces that the pairs form a bijection
    return SeedSpec(_load_pairs(text)).as_dict()


def dump_correspondence(truth):
    return "".join("{} {}\n".format(u, v) for u, v in truth.items())


def symmetrize(graph):
    """Symmetrize by taking the larger of the two directed weights."""
    return Graph(graph.labels, np.maximum(graph.adj, graph.adj.T))


def binarize(graph):
    """Replace every nonzero weight by 1 and drop self-loops."""
    adj = (graph.adj != 0).astype(float)
    np.fill_diagonal(adj, 0)
    return Graph(graph.labels, adj)


def canonicalize(g1, g2, seeds):
    """
    Relabel a seeded pair into block form.

    Seed i of `seeds` lands at index i in both matrices; the remaining
    vertices follow in their original relative order.
    """
    if len(g1) != len(g2):
        raise ValidationError(
            strings.size_mismatch,
            code="size_mismatch",
            params={"n1": len(g1), "n2": len(g2)},
        )
    seeds.validate(g1, g2)
    if seeds.m >= len(g1):
        raise ValidationError(
            strings.nothing_to_match,
            code="nothing_to_match",
            params={"m": seeds.m, "c": len(g1)},
        )

    order1 = [g1.index(u) for u, _v in seeds]
    order2 = [g2.index(v) for _u, v in seeds]
    seeded1, seeded2 = set(order1), set(order2)
    order1 += [i for i in range(len(g1)) if i not in seeded1]
    order2 += [i for i in range(len(g2)) if i not in seeded2]

    return SeededInstance(
        A=g1.adj[np.ix_(order1, order1)],
        B=g2.adj[np.ix_(order2, order2)],
        m=seeds.m,
        labels1=[g1.labels[i] for i in order1],
        labels2=[g2.labels[i] for i in order2],
    )
