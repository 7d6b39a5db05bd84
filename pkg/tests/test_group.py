"""Group generation, composition, matrices, and the on-disk cache."""

from __future__ import annotations

import random

import pytest

from coxtraces.field import ONE
from coxtraces.group import (HEAVY_THRESHOLD, BudgetExceededError,
                             CacheFormatError, MatrixFreeSystemError, compose,
                             contains_minus_identity, generate_group, inverse,
                             load_group, save_group, shared_group, to_matrix)
from coxtraces.linalg import Matrix
from coxtraces.roots import reflection_matrix, system_from_spec

KNOWN_ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120,
    "B2": 8, "B3": 48, "B4": 384,
    "D4": 192, "D5": 1920,
    "F4": 1152, "G2": 12, "H3": 120,
    "I2(3)": 6, "I2(4)": 8, "I2(5)": 10, "I2(6)": 12,
}


def test_generated_orders_match_the_product_formula():
    for label, expected in KNOWN_ORDERS.items():
        group = shared_group(system_from_spec(label))
        assert group.order == expected, label
        assert len(group) == expected


def test_composite_group_order():
    group = shared_group(system_from_spec("A1+G2"))
    assert group.order == 24


def test_matrix_free_factor_is_refused():
    with pytest.raises(MatrixFreeSystemError):
        generate_group(system_from_spec("I2(7)"))
    with pytest.raises(MatrixFreeSystemError):
        generate_group(system_from_spec("B2+I2(11)"))


def test_heavy_groups_need_the_flag():
    system = system_from_spec("E7")
    assert system.known_order > HEAVY_THRESHOLD
    with pytest.raises(BudgetExceededError):
        generate_group(system)


def test_budget_refusal():
    with pytest.raises(BudgetExceededError):
        generate_group(system_from_spec("B3"), budget=10)


def test_e8_is_refused_even_with_heavy_and_budget():
    system = system_from_spec("E8")
    with pytest.raises(BudgetExceededError):
        generate_group(system, budget=10 ** 10, heavy=True)


def test_identity_and_inverse_axioms():
    group = shared_group(system_from_spec("B3"))
    e = group.identity
    rng = random.Random(11)
    ids = [rng.randrange(group.order) for _ in range(40)]
    for i in ids:
        g = group.element(i)
        assert compose(g, e) == g
        assert compose(e, g) == g
        assert compose(g, inverse(g)) == e
        assert compose(inverse(g), g) == e


def test_composition_associates():
    group = shared_group(system_from_spec("A3"))
    rng = random.Random(5)
    for _ in range(30):
        g, h, k = (group.element(rng.randrange(group.order)) for _ in range(3))
        assert compose(compose(g, h), k) == compose(g, compose(h, k))


def test_generators_are_involutive_reflections():
    group = shared_group(system_from_spec("H3"))
    for g in group.generators:
        assert compose(g, g) == group.identity
        m = to_matrix(g)
        assert m.det() == -ONE
        assert m * m == Matrix.identity(3)


def test_matrices_form_a_representation():
    group = shared_group(system_from_spec("B3"))
    rng = random.Random(3)
    for _ in range(25):
        i = rng.randrange(group.order)
        j = rng.randrange(group.order)
        left = group.matrix_of(group.compose_ids(i, j))
        right = group.matrix_of(i) * group.matrix_of(j)
        assert left == right


def test_generator_matrices_equal_literal_reflections():
    system = system_from_spec("B3")
    group = shared_group(system)
    for i in system.simple_root_indices:
        gid = group.reflection_id(i)
        assert group.matrix_of(gid) == reflection_matrix(system.roots[i])


def test_matrices_preserve_the_gram_form():
    # A2 spans only a plane inside its ambient space; the span-basis
    # matrices must still preserve the inner product expressed in that basis
    system = system_from_spec("A2")
    group = shared_group(system)
    basis_ids, coords, full_rank, _ = group._basis()
    assert not full_rank
    from coxtraces.linalg import dot
    basis = [system.roots[i] for i in basis_ids]
    gram = Matrix(tuple(tuple(dot(u, v) for v in basis) for u in basis))
    for i in range(group.order):
        m = group.span_matrix_of(i)
        assert m.transpose() * gram * m == gram


def test_minus_identity_detection_matches_classification():
    for label in ("A1", "A2", "B2", "B3", "D4", "D5", "G2", "F4", "H3",
                  "I2(5)", "I2(6)"):
        system = system_from_spec(label)
        group = shared_group(system)
        expected = all(f.contains_minus_identity for f in system.factors)
        assert contains_minus_identity(group) == expected, label


def test_minus_identity_gone_once_a_fixed_line_exists():
    group = generate_group(system_from_spec("A1+A0"))
    assert not contains_minus_identity(group)


def test_determinant_tracks_word_parity():
    group = shared_group(system_from_spec("G2"))
    # generators have det -1, so any product of k of them has det (-1)^k
    a, b = group.generators
    g = compose(a, b)
    assert to_matrix(g).det() == ONE
    assert to_matrix(compose(g, a)).det() == -ONE


def test_cache_roundtrip(tmp_path):
    group = generate_group(system_from_spec("B2+A1"))
    path = tmp_path / "b2a1.grp"
    save_group(group, path)
    loaded = load_group(path)
    assert loaded.order == group.order
    assert loaded.system.label == "B2+A1"
    assert list(loaded.perms) == list(group.perms)
    assert loaded.generator_ids == group.generator_ids


def test_cache_rejects_corruption(tmp_path):
    group = generate_group(system_from_spec("A2"))
    path = tmp_path / "a2.grp"
    save_group(group, path)
    raw = path.read_bytes()
    path.write_bytes(b"XXXX" + raw[4:])
    with pytest.raises(CacheFormatError):
        load_group(path)
    path.write_bytes(raw[:20])
    with pytest.raises(CacheFormatError):
        load_group(path)


def test_shared_group_memoizes():
    a = shared_group(system_from_spec("A2"))
    b = shared_group(system_from_spec("A2"))
    assert a is b
