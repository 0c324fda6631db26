"""Arc diagrams, the Motzkin path encoding, and step-weight schemes."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclepat import paths, perms, series
from cyclepat.series import WEIGHTS1, WEIGHTS2, MultiPoly


def words(max_n: int = 7):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    )


@given(words())
def test_path_image_is_a_motzkin_path_without_low_flats(word):
    path = paths.to_motzkin_path(tuple(word))
    assert len(path) == len(word)
    assert paths.is_motzkin_path(path)
    assert not paths.has_flat_at_zero(path)


def test_worked_path_image():
    assert paths.to_motzkin_path((4, 7, 6, 1, 3, 8, 5, 2)) == "NNNSFESS"


def test_enumeration_counts_follow_catalan_numbers():
    # with two flat colours the path counts are shifted Catalan numbers,
    # and banning flats at height zero steps the shift back down
    for n in range(7):
        full = sum(1 for _ in paths.enumerate_motzkin_paths(n))
        image = sum(1 for _ in paths.enumerate_motzkin_paths(n, allow_flat_at_zero=False))
        assert full == series.catalan_number(n + 1)
        assert image == series.catalan_number(n)


def test_heights_and_flat_detection():
    assert paths.heights("NES") == [0, 1, 1, 0]
    assert paths.is_motzkin_path("NS") and not paths.is_motzkin_path("SN")
    assert not paths.is_motzkin_path("N")
    assert paths.has_flat_at_zero("F") and not paths.has_flat_at_zero("NFS")


@pytest.mark.parametrize("n", range(6))
def test_preimage_round_trips_every_image_path(n):
    for path in paths.enumerate_motzkin_paths(n, allow_flat_at_zero=False):
        word = paths.path_preimage(path)
        assert paths.to_motzkin_path(word) == path


def test_preimage_rejects_paths_outside_the_image():
    with pytest.raises(paths.NoPreimageError):
        paths.path_preimage("F")
    with pytest.raises(paths.NoPreimageError):
        paths.path_preimage("NSF")


def test_worked_node_weights():
    product = paths.weight_product(((2, 7, 5, 3, 6, 8), (1, 4)))
    assert product == MultiPoly.monomial({"x": 2, "q": 4})


@given(words(6))
def test_weight_product_tracks_cycles_and_occurrences(word):
    cycles = perms.to_cycle_form(tuple(word))
    occurrences = perms.count_cyclic(cycles, perms.parse_pattern("2-13")).total
    expected = MultiPoly.monomial({"x": len(cycles), "q": occurrences})
    assert paths.weight_product(cycles) == expected


@pytest.mark.parametrize("n", range(5))
def test_class_weight_equals_step_weight_product(n):
    for path in paths.enumerate_motzkin_paths(n, allow_flat_at_zero=False):
        assert paths.class_weight(path) == paths.path_weight(path, WEIGHTS2)


@pytest.mark.parametrize("n", range(7))
def test_contraction_round_trips(n):
    for path in paths.enumerate_motzkin_paths(n + 1, allow_flat_at_zero=False):
        reduced = paths.contract_path(path)
        assert len(reduced) == len(path) - 1
        assert paths.is_motzkin_path(reduced)
        assert paths.expand_path(reduced) == path
    for path in paths.enumerate_motzkin_paths(n):
        grown = paths.expand_path(path)
        assert not paths.has_flat_at_zero(grown)
        assert paths.contract_path(grown) == path


@pytest.mark.parametrize("n", range(6))
def test_contraction_transports_weights(n):
    x = MultiPoly.variable("x")
    for path in paths.enumerate_motzkin_paths(n + 1, allow_flat_at_zero=False):
        lhs = paths.path_weight(path, WEIGHTS2)
        rhs = x * paths.path_weight(paths.contract_path(path), WEIGHTS1)
        assert lhs == rhs


def test_step_weights_shape():
    path = "NNSFES"
    weights = paths.step_weights(path, WEIGHTS1)
    assert len(weights) == len(path)
    assert paths.path_weight("", WEIGHTS1) == MultiPoly.const(1)


def test_arc_diagram_rejects_bad_cycles():
    with pytest.raises(ValueError):
        paths.arc_diagram(((1, 3),))
