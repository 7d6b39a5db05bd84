"""Root system construction, parsing, and validation."""

from __future__ import annotations

import pytest

from coxtraces.field import ONE, ZERO, FieldElement
from coxtraces.linalg import Matrix, dot, vneg
from coxtraces.roots import (Factor, SpecParseError, build_irreducible,
                             build_system, direct_sum, parse_factor,
                             parse_system_spec, reflect, reflection_matrix,
                             root_permutation, system_from_spec,
                             validate_root_system)

ROOT_COUNTS = {
    "A1": 2, "A2": 6, "A3": 12, "A5": 30,
    "B2": 8, "B3": 18, "B4": 32,
    "D4": 24, "D5": 40,
    "E6": 72, "E7": 126, "E8": 240,
    "F4": 48, "G2": 12, "H3": 30, "H4": 120,
    "I2(3)": 6, "I2(4)": 8, "I2(5)": 10, "I2(6)": 12,
}

RANKS = {
    "A1": 1, "A2": 2, "A5": 5, "B3": 3, "D4": 4, "E6": 6, "E7": 7,
    "E8": 8, "F4": 4, "G2": 2, "H3": 3, "H4": 4,
    "I2(3)": 2, "I2(4)": 2, "I2(5)": 2, "I2(6)": 2,
}


def test_root_counts():
    for label, expected in ROOT_COUNTS.items():
        system = system_from_spec(label)
        assert len(system.roots) == expected, label


def test_ranks():
    for label, expected in RANKS.items():
        system = system_from_spec(label)
        assert system.rank == expected, label
        assert len(system.simple_root_indices) == expected, label


def test_validation_everywhere():
    for label in ROOT_COUNTS:
        if label in ("E7", "E8"):
            continue   # the big exceptional systems get their own tests
        report = validate_root_system(system_from_spec(label))
        assert report.ok, f"{label}: {report.problems}"


def test_validation_e7():
    report = validate_root_system(system_from_spec("E7"))
    assert report.ok, report.problems


@pytest.mark.heavy
def test_validation_e8():
    report = validate_root_system(system_from_spec("E8"))
    assert report.ok, report.problems


def test_parse_factor_families():
    assert parse_factor("A0").label == "A0"
    assert parse_factor("B5") == Factor("B", 5)
    assert parse_factor("C5") == Factor("B", 5)   # same group, one name
    assert parse_factor("I2(7)") == Factor("I", 7)
    assert parse_factor("E8").label == "E8"


def test_parse_rejects_bad_tokens():
    for bad in ("Z9", "A-1", "B1", "D1", "E5", "E9", "F5", "G3", "H5",
                "I2(2)", "I2(x)", "A", "", "B2 D3"):
        with pytest.raises(SpecParseError):
            parse_factor(bad)


def test_parse_system_spec():
    factors = parse_system_spec("B4 + D5+I2(7) + A0")
    assert [f.label for f in factors] == ["B4", "D5", "I2(7)", "A0"]
    with pytest.raises(SpecParseError):
        parse_system_spec("B4 ++ A1")
    with pytest.raises(SpecParseError):
        parse_system_spec("")


def test_factor_orders():
    assert Factor("A", 4).order == 120
    assert Factor("B", 4).order == 384
    assert Factor("D", 4).order == 192
    assert Factor("E", 8).order == 696729600
    assert Factor("H", 4).order == 14400
    assert Factor("I", 7).order == 14
    assert Factor("A", 0).order == 1


def test_minus_identity_classification():
    expects = {
        "A0": False, "A1": True, "A2": False, "A3": False,
        "B2": True, "B7": True, "D4": True, "D5": False, "D6": True,
        "E6": False, "E7": True, "E8": True, "F4": True, "G2": True,
        "H3": True, "H4": True, "I2(5)": False, "I2(6)": True,
    }
    for label, expected in expects.items():
        assert parse_factor(label).contains_minus_identity == expected, label


def test_noncanonical_low_rank_d():
    assert not Factor("D", 2).canonical
    assert not Factor("D", 3).canonical
    assert Factor("D", 4).canonical


def test_matrix_model_availability():
    assert Factor("I", 5).has_matrix_model
    assert Factor("I", 6).has_matrix_model
    assert not Factor("I", 7).has_matrix_model
    assert not Factor("I", 30).has_matrix_model
    assert Factor("H", 4).has_matrix_model


def test_dihedral_embeddings_need_extra_dimensions():
    # the crystallographic dihedrals and the pentagon all need a third axis
    assert build_irreducible(Factor("I", 3)).dimension == 3
    assert build_irreducible(Factor("I", 4)).dimension == 2
    assert build_irreducible(Factor("I", 5)).dimension == 3
    assert build_irreducible(Factor("I", 6)).dimension == 3


def test_matrix_free_shell():
    system = build_irreducible(Factor("I", 7))
    assert system.matrix_free
    assert system.roots == ()
    assert system.known_order == 14


def test_empty_system_contributes_a_fixed_line():
    system = build_irreducible(Factor("A", 0))
    assert system.dimension == 1
    assert system.trivial_dims == 1
    assert system.roots == ()
    assert not system.matrix_free


def test_direct_sum_bookkeeping():
    left = system_from_spec("B2")
    right = system_from_spec("A2")
    total = direct_sum(left, right)
    assert total.dimension == left.dimension + right.dimension
    assert len(total.roots) == len(left.roots) + len(right.roots)
    assert total.known_order == left.known_order * right.known_order
    assert validate_root_system(total).ok


def test_composite_with_empty_and_free_parts():
    system = system_from_spec("B2+I2(9)+A0")
    assert system.matrix_free
    assert system.trivial_dims == 1
    assert system.known_order == 8 * 18 * 1
    assert system.label == "B2+I2(9)+A0"


def test_build_system_roundtrip():
    factors = parse_system_spec("A1+G2")
    system = build_system(factors)
    assert system.label == "A1+G2"
    assert len(system.roots) == 2 + 12


def test_reflection_fixes_orthogonal_and_negates_root():
    system = system_from_spec("B3")
    for i in system.simple_root_indices:
        v = system.roots[i]
        assert reflect(v, v) == vneg(v)
        m = reflection_matrix(v)
        assert m * m == Matrix.identity(3)
        assert m.det() == -ONE


def test_reflect_permutes_the_root_set():
    for label in ("A2", "B3", "G2", "H3", "I2(5)"):
        system = system_from_spec(label)
        root_set = set(system.roots)
        for v in system.roots:
            assert {reflect(x, v) for x in root_set} == root_set


def test_root_permutation_is_a_permutation():
    system = system_from_spec("H3")
    n = len(system.roots)
    for i in system.simple_root_indices:
        perm = root_permutation(system, system.roots[i])
        assert sorted(perm) == list(range(n))


def test_roots_come_in_opposite_pairs():
    system = system_from_spec("F4")
    index = system.root_index
    for root in system.roots:
        assert index[vneg(root)] != index[root]


def test_direct_sum_validates():
    for spec in ("A3+I2(5)", "B3+A1", "D4+B2", "G2+A2+A1"):
        assert validate_root_system(system_from_spec(spec)).ok, spec


def test_highest_h3_root_reflection_has_golden_entries():
    # one H3 root is (1, k, k-1)/2 up to scale; its reflection matrix is
    # rational only in the golden ratio, exercising the quadratic field
    system = system_from_spec("H3")
    golden_roots = [r for r in system.roots
                    if not all(c.is_rational for c in r)]
    assert golden_roots
    m = reflection_matrix(golden_roots[0])
    assert m * m == Matrix.identity(3)
    assert m.det() == -ONE
    assert not all(entry.is_rational for row in m.rows for entry in row)
