import pytest
from hypothesis import given, strategies as st

from trigonal5 import config_blocks as cb
from trigonal5.group_rep import (
    D4,
    TABLES,
    CharacterError,
    VirtualCharacter,
    check_orthogonality,
    compose,
    cycle_type,
    decompose,
    from_cycles,
    generate,
    inverse,
    isotypic_multiplicity,
    restrict_character,
    sign,
    sign_local_system,
)


@pytest.mark.parametrize("name", sorted(TABLES))
def test_tables_orthonormal(name):
    check_orthogonality(TABLES[name])


@pytest.mark.parametrize("name,order", [("S2", 2), ("S3", 6), ("S4", 24), ("S5", 120), ("D4", 8)])
def test_group_orders(name, order):
    assert TABLES[name].order == order


def test_complete_tables_sum_of_squares():
    for t in TABLES.values():
        if t.complete:
            assert sum(t.dim(n) ** 2 for n in t.irreps) == t.order


def test_d4_class_representatives():
    reps = [cycle_type(c) for c in D4.classes]
    assert reps == [(1, 1, 1, 1), (2, 2), (4,), (2, 1, 1), (2, 2)]
    assert D4.class_sizes == (1, 1, 2, 2, 2)


def test_aliases():
    assert D4.values("rho2") == D4.values("psi3")
    assert TABLES["S3"].resolve("sign") == "S111"
    with pytest.raises(CharacterError):
        D4.resolve("psi9")


@given(st.permutations(range(5)), st.permutations(range(5)))
def test_sign_is_a_homomorphism(a, b):
    a, b = tuple(a), tuple(b)
    assert sign(compose(a, b)) == sign(a) * sign(b)
    assert compose(a, inverse(a)) == tuple(range(5))


def test_generate_s4():
    assert len(generate([from_cycles(4, (1, 2)), from_cycles(4, (1, 2, 3, 4))])) == 24


@pytest.mark.parametrize("irrep,expected", [
    ("S5", {"S4": 1}),
    ("S32", {"S31": 1, "S22": 1}),
    ("S311", {"S31": 1, "S211": 1}),
])
def test_s5_to_s4_branching(irrep, expected):
    assert restrict_character(VirtualCharacter.of("S5", {irrep: 1}), "S4") == VirtualCharacter.of("S4", expected)


@pytest.mark.parametrize("irrep,expected", [
    ("S4", {"psi1": 1}),
    ("S31", {"chi": 1, "psi3": 1}),
    ("S22", {"psi1": 1, "psi4": 1}),
    ("S211", {"chi": 1, "psi2": 1}),
])
def test_s4_to_d4(irrep, expected):
    assert restrict_character(VirtualCharacter.of("S4", {irrep: 1}), "D4") == VirtualCharacter.of("D4", expected)


def test_restriction_to_s2_of_standard():
    assert restrict_character(VirtualCharacter.of("S3", S21=1), "S2") == VirtualCharacter.of("S2", triv=1, sign=1)


def test_decompose_rejects_non_characters():
    with pytest.raises(CharacterError):
        decompose("D4", (1, 0, 0, 0, 0))


def test_unknown_embedding():
    with pytest.raises(CharacterError):
        restrict_character(VirtualCharacter.of("D4", psi1=1), "S3")


def test_figure_action_gives_psi2():
    assert sign_local_system(cb.FIGURE_ACTION) == "psi2"


def test_other_action_gives_psi3():
    action = {cb.D4_ROTATION: from_cycles(8, (1, 3, 2, 4)), cb.D4_FLIP: from_cycles(8, (1, 2), (5, 6))}
    assert sign_local_system(action) == "psi3"


def test_sign_local_system_rejects_non_homomorphism():
    action = {cb.D4_ROTATION: from_cycles(8, (1, 2, 3)), cb.D4_FLIP: from_cycles(8, (1, 2))}
    with pytest.raises(CharacterError):
        sign_local_system(action)


def test_m05_psi2_multiplicities():
    got = {d: isotypic_multiplicity(v, "psi2") for d, v, _ in cb.bm_M05_as_D4()}
    assert got == {4: 0, 3: 0, 2: 1}


def test_m05_d4_decomposition():
    got = {d: v for d, v, _ in cb.bm_M05_as_D4()}
    assert got[3] == VirtualCharacter.of("D4", psi1=1, psi3=1, psi4=1, chi=1)
    assert got[2] == VirtualCharacter.of("D4", psi2=1, psi3=1, chi=2)
