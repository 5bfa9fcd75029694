import pytest

from quasidom.grids import verify_set
from quasidom.pattern import (
    build_big_grid_set,
    choose_residue,
    diagonal_partition,
    project_inner,
)
from quasidom.solver import big_grid_value


def test_partition_small_example():
    # 1x1 inner grid -> 3x3 extended grid
    assert diagonal_partition(1, 1, 0) == frozenset({(0, 0), (2, 1)})


@pytest.mark.parametrize("m,n", [(1, 1), (5, 9), (14, 18), (16, 23)])
def test_partition_covers_extended_grid(m, n):
    classes = [diagonal_partition(m, n, s) for s in range(5)]
    union = set().union(*classes)
    assert len(union) == (m + 2) * (n + 2)
    assert sum(len(c) for c in classes) == (m + 2) * (n + 2)
    total = (m + 2) * (n + 2)
    for c in classes:
        assert total // 5 <= len(c) <= -(-total // 5)


def test_projection_basics():
    m, n = 6, 7
    cells = frozenset({(3, 3), (0, 4), (7, 2), (5, 0), (2, 8), (0, 0), (7, 8)})
    inner = project_inner(cells, m, n)
    assert (3, 3) in inner  # inner vertex kept
    assert (1, 4) in inner  # top edge moves down
    assert (6, 2) in inner  # bottom edge moves up
    assert (5, 1) in inner  # left edge moves right
    assert (2, 7) in inner  # right edge moves left
    assert (1, 1) not in inner and (6, 7) not in inner  # corners dropped
    assert len(inner) <= len(cells)


@pytest.mark.parametrize("m,n", [(14, 14), (14, 18), (15, 20), (17, 23)])
def test_projection_never_grows(m, n):
    for s in range(5):
        v = diagonal_partition(m, n, s)
        assert len(project_inner(v, m, n)) <= len(v)


def test_choose_residue_attains_minimum():
    for m, n in ((14, 18), (15, 15), (16, 29), (20, 24)):
        s = choose_residue(m, n)
        sizes = [len(diagonal_partition(m, n, r)) for r in range(5)]
        assert sizes[s] == min(sizes)
        assert sizes[s] <= (m + 2) * (n + 2) // 5


def test_choose_residue_tie_break():
    # when several classes tie, the smallest residue wins
    m, n = 14, 18
    sizes = [len(diagonal_partition(m, n, r)) for r in range(5)]
    best = min(sizes)
    assert choose_residue(m, n) == sizes.index(best)


PUBLISHED_SMALL_CASES = {
    (14, 14): 47,
    (14, 15): 50,
    (14, 16): 53,
    (14, 17): 56,
    (15, 15): 53,
    (15, 16): 57,
    (15, 17): 60,
}


@pytest.mark.parametrize("m,n", sorted(PUBLISHED_SMALL_CASES))
def test_small_big_grid_cases(m, n):
    s = build_big_grid_set(m, n)
    assert len(s) == PUBLISHED_SMALL_CASES[(m, n)]
    assert verify_set(s).ok


@pytest.mark.parametrize("m,n", [(14, 18), (16, 16), (17, 19), (18, 22), (21, 25)])
def test_big_grid_target_and_validity(m, n):
    s = build_big_grid_set(m, n)
    assert len(s) == big_grid_value(m, n)
    assert verify_set(s).ok


def test_build_rejects_small_grids():
    with pytest.raises(ValueError):
        build_big_grid_set(13, 20)
    with pytest.raises(ValueError):
        build_big_grid_set(15, 14)


def test_changes_are_localized_for_corner_repairs():
    m, n = 18, 22
    result, info = build_big_grid_set(m, n, with_info=True)
    assert info["s"] is not None
    base = project_inner(diagonal_partition(m, n, info["s"]), m, n)
    touched = set()
    for region in info["regions"]:
        (r1, r2), (c1, c2) = region["rows"], region["cols"]
        touched |= {(i, j) for i in range(r1, r2 + 1) for j in range(c1, c2 + 1)}
    outside_result = {v for v in result.members if v not in touched}
    outside_base = {v for v in base.members if v not in touched}
    assert outside_result == outside_base


@pytest.mark.slow
def test_wider_grids_beyond_the_default_sweep():
    cases = [(22, 33), (25, 40), (31, 31), (34, 45), (40, 40), (14, 40), (16, 37), (17, 51)]
    for m, n in cases:
        s = build_big_grid_set(m, n)
        assert len(s) == big_grid_value(m, n), (m, n)
        assert verify_set(s).ok, (m, n)


def test_interior_is_a_perfect_code():
    # far from the border and the repairs, non-members have one dominator
    m, n = 20, 26
    result = build_big_grid_set(m, n)
    members = result.members
    for i in range(10, m - 8):
        for j in range(10, n - 8):
            if (i, j) in members:
                continue
            count = sum(
                1
                for v in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
                if v in members
            )
            assert count == 1, (i, j)
