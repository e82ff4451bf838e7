"""X_lambda 的构造、微分矩阵与同调；lambda=(4,4,3) 的矩阵逐元素对照"""

import pytest

from src.analysis.ferrers import Partition
from src.core.exactlinalg import RationalMatrix, rank
from src.core.io_formats import format_monomial
from src.core.monomial_core import Monomial
from src.resolution.cellular_complex import (
    Edge,
    Face,
    LabeledComplex,
    Vertex,
    boundary_maps,
    build_complex,
    differentials_to_json,
    face_cycle_matrix,
    incidence_matrix,
    is_acyclic,
    product_is_zero_numeric,
    product_is_zero_symbolic,
    reduced_homology_ranks,
    restrict_complex,
    sign_pattern,
    to_dot,
)

VERTICES_443 = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3)]
EDGES_443 = [
    ((1, 1), (1, 2)),
    ((1, 2), (1, 3)),
    ((1, 3), (1, 4)),
    ((1, 2), (2, 2)),
    ((1, 3), (2, 3)),
    ((1, 4), (2, 4)),
    ((2, 2), (2, 3)),
    ((2, 3), (2, 4)),
    ((2, 3), (3, 3)),
]
VERTEX_LABELS_443 = [
    "x2^2*x3^2*x4",
    "x1*x2*x3^2*x4",
    "x1*x2^2*x3*x4",
    "x1*x2^2*x3^2",
    "x1^2*x3^2*x4",
    "x1^2*x2*x3*x4",
    "x1^2*x2*x3^2",
    "x1^2*x2^2*x4",
]

INCIDENCE_443 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, -1, 0, -1, 1, 1],
    [0, 0, 0, 0, 0, -1, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1],
]

FACE_CYCLE_443 = [
    [0, 0],
    [1, 0],
    [0, 1],
    [-1, 0],
    [1, -1],
    [0, 1],
    [-1, 0],
    [0, -1],
    [0, 0],
]

# (行, 列, 符号, 变量下标)
D1_443 = [
    [0, 0, 1, 1], [1, 0, -1, 2],
    [1, 1, 1, 2], [2, 1, -1, 3],
    [2, 2, 1, 3], [3, 2, -1, 4],
    [1, 3, 1, 1], [4, 3, -1, 2],
    [2, 4, 1, 1], [5, 4, -1, 2],
    [3, 5, 1, 1], [6, 5, -1, 2],
    [4, 6, 1, 2], [5, 6, -1, 3],
    [5, 7, 1, 3], [6, 7, -1, 4],
    [5, 8, 1, 2], [7, 8, -1, 3],
]
D2_443 = [
    [1, 0, 1, 1], [4, 0, 1, 3], [6, 0, -1, 2], [3, 0, -1, 2],
    [2, 1, 1, 1], [5, 1, 1, 4], [7, 1, -1, 2], [4, 1, -1, 3],
]


@pytest.fixture
def complex443(lam443):
    return build_complex(lam443)


def test_cell_counts_and_order(complex443):
    assert [v.position for v in complex443.vertices] == VERTICES_443
    assert [(e.tail, e.head) for e in complex443.edges] == EDGES_443
    assert [f.boundary[0] for f in complex443.faces] == [(1, 2), (1, 3)]
    assert complex443.faces[0].corners == ((1, 2), (2, 2), (2, 3), (1, 3))


def test_labels(complex443):
    assert [format_monomial(v.label) for v in complex443.vertices] == VERTEX_LABELS_443
    m = complex443.lcm
    assert m == Monomial((2, 2, 2, 1))
    for edge in complex443.edges:
        (i, j), head = edge.tail, edge.head
        removed = i if head == (i, j + 1) else j
        assert edge.label == m / Monomial.variable(4, removed - 1)
    assert all(f.label == m for f in complex443.faces)


def test_golden_incidence_and_face_cycle_matrices(complex443):
    assert incidence_matrix(complex443) == RationalMatrix.from_rows(INCIDENCE_443)
    assert face_cycle_matrix(complex443) == RationalMatrix.from_rows(FACE_CYCLE_443)


def test_golden_differentials(complex443):
    free = boundary_maps(complex443)
    exported = differentials_to_json(free)
    assert exported["d1"]["rows"] == 8 and exported["d1"]["cols"] == 9
    assert exported["d2"]["rows"] == 9 and exported["d2"]["cols"] == 2
    assert sorted(exported["d1"]["entries"]) == sorted(D1_443)
    assert sorted(exported["d2"]["entries"]) == sorted(D2_443)
    assert exported["d0"] == VERTEX_LABELS_443


def test_betti_and_shifts(complex443):
    free = boundary_maps(complex443)
    assert free.betti == (8, 9, 2)
    assert free.shifts == (5, 6, 7)


def test_sign_patterns_match_graph_matrices(complex443):
    free = boundary_maps(complex443)
    assert sign_pattern(free.d1, 9) == incidence_matrix(complex443)
    assert sign_pattern(free.d2, 2) == face_cycle_matrix(complex443)


def test_complex_condition_both_ways(complex443):
    free = boundary_maps(complex443)
    assert product_is_zero_symbolic(free.d1, free.d2)
    assert product_is_zero_numeric(free.d1, free.d2, 4)


def test_matrix_ranks(complex443):
    nu, eps = complex443.num_vertices, complex443.num_edges
    assert rank(incidence_matrix(complex443)) == nu - complex443.num_components() == 7
    assert rank(face_cycle_matrix(complex443)) == eps - nu + 1 == 2


def test_whole_complex_is_acyclic(complex443):
    assert reduced_homology_ranks(complex443) == (0, 0, 0, 0)
    assert is_acyclic(complex443)


def test_restriction_below_vertex_label(complex443):
    b = complex443.vertices[0].label
    sub = restrict_complex(complex443, b)
    assert sub.num_vertices == 1 and sub.num_edges == 0
    assert is_acyclic(sub)


def test_restriction_to_non_member_is_void(complex443):
    sub = restrict_complex(complex443, Monomial((1, 1, 1, 1)))
    assert sub.is_void()
    assert is_acyclic(sub)


def test_two_disconnected_vertices_are_not_acyclic():
    n = 2
    x, y = Monomial.variable(n, 0), Monomial.variable(n, 1)
    complex_ = LabeledComplex(
        vertices=(Vertex((1, 1), x), Vertex((1, 2), y)),
        edges=(),
        faces=(),
        lcm=x * y,
    )
    assert reduced_homology_ranks(complex_) == (0, 1, 0, 0)
    assert not is_acyclic(complex_)


def test_hollow_square_has_one_cycle():
    n = 1
    one = Monomial.identity(n)
    square = [(1, 1), (1, 2), (2, 2), (2, 1)]
    complex_ = LabeledComplex(
        vertices=tuple(Vertex(p, one) for p in sorted(square)),
        edges=tuple(Edge(a, b, one) for a, b in zip(square, square[1:] + square[:1])),
        faces=(),
        lcm=one,
    )
    assert reduced_homology_ranks(complex_) == (0, 0, 1, 0)
    filled = LabeledComplex(
        complex_.vertices, complex_.edges, (Face(tuple(square), one),), one
    )
    assert is_acyclic(filled)


def test_single_vertex_complex():
    complex_ = build_complex(Partition((1,)))
    assert complex_.num_vertices == 1
    assert complex_.vertices[0].label.is_identity()
    free = boundary_maps(complex_)
    assert free.betti == (1, 0, 0)
    assert incidence_matrix(complex_).cols == 0
    assert is_acyclic(complex_)


@pytest.mark.parametrize("parts, betti", [((3,), (3, 2, 0)), ((2, 2), (3, 2, 0)), ((3, 3), (5, 5, 1))])
def test_small_partitions(parts, betti):
    assert boundary_maps(build_complex(Partition(parts))).betti == betti


def test_dot_export(complex443):
    text = to_dot(complex443)
    assert "digraph" in text
    assert "v_1_1" in text and "v_3_3" in text
    assert text.count("->") == 9
    assert "x2^2*x3^2*x4" in text
