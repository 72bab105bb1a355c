import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from monofock.fock.basis import (
    IndexSet,
    TruncationSpec,
    annihilate,
    create,
    enumerate_basis,
    enumerate_subspace,
    right_annihilate,
    right_create,
    validate_basis_vector,
)
from monofock.logging import InvalidInputError

basis_vectors = st.lists(st.integers(min_value=1, max_value=12), max_size=6, unique=True).map(
    lambda xs: tuple(sorted(xs))
)
labels = st.integers(min_value=1, max_value=12)


def test_enumerate_basis_graded_lex(trunc3):
    assert enumerate_basis(trunc3) == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


@pytest.mark.parametrize("n,level,dim", [(4, 2, 11), (3, 3, 8), (5, 1, 6), (2, 5, 4)])
def test_dimension_matches_enumeration(n, level, dim):
    trunc = TruncationSpec(max_index=n, max_level=level)
    assert trunc.dimension == dim
    assert len(enumerate_basis(trunc)) == dim


def test_enumerate_subspace_uses_given_labels():
    assert enumerate_subspace((1, 3)) == [(), (1,), (3,), (1, 3)]


def test_elementary_actions():
    assert create(1, (2,)) == (1, 2)
    assert create(2, (1, 3)) is None
    assert create(4, ()) == (4,)
    assert annihilate(1, (1, 3)) == (3,)
    assert annihilate(3, (1, 3)) is None
    assert annihilate(1, ()) is None
    assert right_create(4, (1, 3)) == (1, 3, 4)
    assert right_create(2, (1, 3)) is None
    assert right_annihilate(3, (1, 3)) == (1,)
    assert right_annihilate(1, (1, 3)) is None


@pytest.mark.parametrize("action", [create, annihilate, right_create, right_annihilate])
def test_labels_must_be_positive(action):
    with pytest.raises(InvalidInputError):
        action(0, ())


@given(labels, basis_vectors)
def test_create_then_annihilate_is_identity(i, v):
    image = create(i, v)
    if image is not None:
        assert annihilate(i, image) == v
        assert image[0] == i


@given(labels, basis_vectors)
def test_right_actions_are_mirror_images(i, v):
    mirrored = tuple(13 - k for k in reversed(v))
    left = create(13 - i, mirrored)
    right = right_create(i, v)
    assert (left is None) == (right is None)


def test_index_set_parse():
    assert IndexSet.parse("1,3").indices == (1, 3)
    assert IndexSet.parse("9, 2,5").indices == (2, 5, 9)
    with pytest.raises(InvalidInputError):
        IndexSet.parse("1,1")
    with pytest.raises(InvalidInputError):
        IndexSet.parse("a,2")
    with pytest.raises(InvalidInputError):
        IndexSet.parse("0,2")


def test_index_set_validation():
    with pytest.raises(ValidationError):
        IndexSet(indices=(3, 1))
    with pytest.raises(ValidationError):
        IndexSet(indices=())


def test_index_set_properties():
    index_set = IndexSet(indices=(2, 5, 9))
    assert len(index_set) == 3
    assert index_set.max == 9
    assert index_set.is_gapped
    assert index_set.complement() == (1, 3, 4, 6, 7, 8)
    assert not IndexSet.contiguous(4).is_gapped


def test_validate_basis_vector():
    assert validate_basis_vector((1, 4)) == (1, 4)
    with pytest.raises(InvalidInputError):
        validate_basis_vector((4, 1))
