import numpy as np
import pytest

from tfnorm.family import FAMILY_NAMES, random_smooth
from tfnorm.family import test_family as make_family
from tfnorm.grid import GridSpec, boundary_mass


def test_family_members_normalized(grid, family):
    for name, f in family:
        assert f.norm2() == pytest.approx(1.0, rel=1e-12), name


def test_family_boundary_mass(grid, family):
    for name, f in family:
        assert boundary_mass(f) < 1e-12, name


def test_family_deterministic(grid):
    a = test_family(grid, seed=0)
    b = test_family(grid, seed=0)
    for (na, fa), (nb, fb) in zip(a, b):
        assert na == nb
        assert np.array_equal(fa.values, fb.values)


def test_family_seed_changes_random_members(grid):
    a = dict(test_family(grid, seed=0))
    b = dict(test_family(grid, seed=1))
    assert not np.array_equal(a["randbl_0"].values, b["randbl_0"].values)
    assert np.array_equal(a["gauss_a1"].values, b["gauss_a1"].values)


def test_family_names_stable(grid, family):
    assert [name for name, _ in family] == FAMILY_NAMES


def test_family_covers_kinds(family):
    names = [name for name, _ in family]
    for prefix in ("gauss_a", "gauss_t", "bump_w", "hermite_", "chirp_c", "randbl_"):
        assert any(n.startswith(prefix) for n in names), prefix


def test_random_smooth_determinism(grid):
    f1 = random_smooth(grid, 4)
    f2 = random_smooth(grid, 4)
    assert np.array_equal(f1.values, f2.values)
    assert f1.norm2() == pytest.approx(1.0, rel=1e-12)


def test_small_family_subset(grid):
    small = test_family(grid, seed=0, small=True)
    assert 5 <= len(small) <= 12


def test_family_rejects_d2():
    with pytest.raises(ValueError):
        test_family(GridSpec(2, 8.0, 64))
