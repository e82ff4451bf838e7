import pytest

from src.analysis.ferrers import Partition
from src.core.errors import VerificationError
from src.resolution.cellular_complex import build_complex, boundary_maps
from src.resolution.verifier import (
    betti_formulas,
    betti_identities,
    betti_table,
    check_acyclicity,
    closed_form_betti,
    describe_failure,
    summarize_complex,
    verify_resolution,
)


def test_golden_443_summary(lam443):
    summary = verify_resolution(lam443, use_oracle=True)
    assert summary.betti == (8, 9, 2)
    assert summary.shifts == (5, 6, 7)
    assert summary.regularity == 4
    assert summary.projective_dimension == 3
    assert summary.is_linear
    assert summary.oracle_checked
    assert summary.lattice_size > 0


@pytest.mark.parametrize("parts", [(3,), (2, 2)])
def test_degenerate_partitions(parts):
    summary = verify_resolution(Partition(parts), use_oracle=True)
    assert summary.betti == (3, 2, 0)
    assert summary.projective_dimension == 2
    assert summary.is_linear


def test_single_vertex_partition():
    summary = verify_resolution(Partition((1,)), use_oracle=True)
    assert summary.betti == (1, 0, 0)
    assert summary.projective_dimension == 1
    assert summary.regularity == -1


@pytest.mark.parametrize("parts", [(2, 2), (3, 2), (3, 3), (4, 3, 3), (5, 4, 3), (4, 4, 4, 4)])
def test_regularity_corollary(parts):
    lam = Partition(parts)
    summary = verify_resolution(lam)
    if summary.betti[2]:
        assert summary.regularity == lam.n + lam.m - 3
        assert summary.projective_dimension == 3


def test_betti_formulas(lam443):
    assert betti_formulas(lam443) == (8, 9, 2)
    assert betti_formulas(Partition((1,))) == (1, 0, 0)
    assert closed_form_betti(Partition((2, 1))) == (2, 0, -1)
    assert betti_formulas(Partition((2, 1))) == (2, 0, 0)


def test_betti_identities(lam443):
    assert betti_identities(lam443)
    assert betti_identities(Partition((4, 3, 3)))


def test_betti_table(lam443):
    table = betti_table(verify_resolution(lam443))
    assert list(table.columns) == [0, 1, 2, 3]
    assert list(table.index) == [0, 4]
    assert table.loc[4].tolist() == [0, 8, 9, 2]
    assert table.loc[0].tolist() == [1, 0, 0, 0]


def test_acyclicity_failure_names_degree(lam443):
    complex_ = build_complex(lam443)
    broken = type(complex_)(complex_.vertices, complex_.edges[1:], complex_.faces[:0], complex_.lcm, lam443)
    with pytest.raises(VerificationError) as info:
        check_acyclicity(broken)
    assert info.value.check == "acyclicity"
    assert "fails at b=" in describe_failure(info.value)


def test_summary_without_verification(lam443):
    complex_ = build_complex(lam443)
    summary = summarize_complex(complex_, boundary_maps(complex_))
    assert summary.betti == (8, 9, 2)
    assert summary.diagnostics == []
