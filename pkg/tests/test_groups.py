"""Tests for permutation groups and character tables."""

from fractions import Fraction

import pytest
from sympy import Matrix
from sympy.combinatorics import Permutation

from equivariant_ehrhart.arith import Cyclotomic
from equivariant_ehrhart.errors import (
    GroupMismatch,
    InvalidInput,
    NotASubgroup,
    OrderCapExceeded,
    OutOfRange,
)
from equivariant_ehrhart.groups import (
    ClassFunction,
    as_permutation,
    character_table_cyclic,
    character_table_elementary2,
    character_table_from_rows,
    character_table_symmetric,
    close_group,
    cycle_type,
    cyclic_group,
    decompose,
    elementary_abelian_2_group,
    inner_product,
    partitions_descending,
    power_characters,
    restrict,
    symmetric_character,
    symmetric_group,
)


class TestFiniteGroup:
    """Tests for group closure and conjugacy classes."""

    def test_cyclic_group(self):
        group = cyclic_group(4)
        assert group.order == 4
        assert len(group.conjugacy_classes) == 4
        assert group.exponent == 4
        assert group.is_abelian()
        assert list(group.identity.array_form) == [0, 1, 2, 3]

    def test_symmetric_group_classes(self):
        group = symmetric_group(3)
        assert group.order == 6
        assert group.class_sizes == [1, 3, 2]

    def test_s4_class_sizes(self):
        assert sorted(symmetric_group(4).class_sizes) == [1, 3, 6, 6, 8]

    def test_identity_class_first(self):
        group = symmetric_group(4)
        assert group.class_sizes[0] == 1
        assert group.class_index(group.identity) == 0

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded) as exc_info:
            close_group([[1, 0, 2], [1, 2, 0]], order_cap=5)
        assert exc_info.value.details["order"] == 6

    def test_equality_ignores_generators(self):
        assert close_group([[2, 0, 1]]) == cyclic_group(3)

    def test_elementary_abelian(self):
        group = elementary_abelian_2_group(2)
        assert group.order == 4
        assert group.degree == 4
        assert group.exponent == 2

    def test_subgroup(self):
        s3 = symmetric_group(3)
        a3 = s3.subgroup([[1, 2, 0]])
        assert a3.order == 3
        assert a3.is_subgroup_of(s3)
        assert not s3.is_subgroup_of(a3)

    def test_subgroup_rejects_foreign_generator(self):
        with pytest.raises(NotASubgroup):
            cyclic_group(3).subgroup([[1, 0, 2]])

    def test_class_index_of_non_element(self):
        with pytest.raises(NotASubgroup):
            cyclic_group(3).class_index([1, 0, 2])


class TestPermutations:
    """Tests for permutation helpers."""

    def test_as_permutation_pads(self):
        assert list(as_permutation([1, 0], degree=3).array_form) == [1, 0, 2]

    def test_as_permutation_rejects_non_permutation(self):
        with pytest.raises(InvalidInput):
            as_permutation([0, 0])

    def test_as_permutation_rejects_larger_degree(self):
        with pytest.raises(InvalidInput):
            as_permutation([1, 2, 0], degree=2)

    def test_cycle_type(self):
        assert cycle_type(Permutation([1, 0, 2])) == (2, 1)
        assert cycle_type(Permutation([1, 2, 3, 0])) == (4,)


class TestClassFunction:
    """Tests for class function arithmetic."""

    def test_wrong_length(self):
        with pytest.raises(InvalidInput):
            ClassFunction(cyclic_group(3), [1, 1])

    def test_zero_absorbs(self):
        group = cyclic_group(3)
        chi = ClassFunction.trivial(group)
        assert chi + 0 == chi
        assert 0 + chi == chi
        assert ClassFunction.zero(group) == 0

    def test_scaling(self):
        group = cyclic_group(2)
        chi = ClassFunction(group, [2, 0]) * Fraction(1, 2)
        assert chi == ClassFunction(group, [1, 0])

    def test_mismatched_groups(self):
        with pytest.raises(GroupMismatch):
            ClassFunction.trivial(cyclic_group(3)) + ClassFunction.trivial(cyclic_group(4))

    def test_value_at_element(self):
        group = cyclic_group(3)
        chi = character_table_cyclic(3, group).irreducibles[1]
        assert chi([1, 2, 0]) in (Cyclotomic.root_of_unity(3), Cyclotomic.root_of_unity(3, 2))
        assert chi.degree == 1

    def test_permutation_character(self):
        group = symmetric_group(3)
        chi = ClassFunction.permutation_character(
            group, lambda g: sum(1 for i in range(3) if g(i) == i)
        )
        assert chi.values == (3, 1, 0)


class TestCharacterTables:
    """Tests for the built-in character tables."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
    def test_cyclic_is_orthonormal(self, n):
        character_table_cyclic(n).validate()

    def test_cyclic_generator_values(self):
        group = cyclic_group(5)
        table = character_table_cyclic(5, group, generator=[1, 2, 3, 4, 0])
        assert table.irreducibles[1]([1, 2, 3, 4, 0]) == Cyclotomic.root_of_unity(5)

    def test_cyclic_wrong_order(self):
        with pytest.raises(InvalidInput):
            character_table_cyclic(4, cyclic_group(3))

    def test_elementary2(self):
        table = character_table_elementary2(2)
        table.validate()
        assert table.labels == ("chi_00", "chi_10", "chi_01", "chi_11")

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_symmetric_is_orthonormal(self, n):
        character_table_symmetric(n).validate()

    def test_symmetric_s3_rows(self):
        table = character_table_symmetric(3)
        assert table.labels == ("[3]", "[2,1]", "[1,1,1]")
        assert table.irreducibles[table.index("[2,1]")].values == (2, 0, -1)
        assert table.irreducibles[table.index("[1,1,1]")].values == (1, -1, 1)

    def test_symmetric_out_of_range(self):
        with pytest.raises(OutOfRange):
            character_table_symmetric(9)

    def test_murnaghan_nakayama(self):
        assert symmetric_character((3, 1), (2, 1, 1)) == 1
        assert symmetric_character((2, 2), (2, 2)) == 2
        assert symmetric_character((2, 1, 1), (4,)) == 1

    def test_partitions_descending(self):
        assert partitions_descending(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_from_rows(self):
        group = cyclic_group(2)
        table = character_table_from_rows(group, [[0, 1], [1, 0]], [1, 1], [[1, 1], [1, -1]])
        assert table.labels == ("chi_0", "chi_1")

    def test_from_rows_rejects_non_orthonormal(self):
        with pytest.raises(InvalidInput):
            character_table_from_rows(cyclic_group(2), [[0, 1], [1, 0]], [1, 1], [[1, 1], [1, 1]])

    def test_from_rows_rejects_wrong_size(self):
        with pytest.raises(InvalidInput):
            character_table_from_rows(cyclic_group(2), [[0, 1], [1, 0]], [1, 2], [[1, 1], [1, -1]])


class TestDecomposition:
    """Tests for inner products, decomposition and restriction."""

    def test_regular_character(self):
        table = character_table_cyclic(3)
        regular = ClassFunction.regular(table.group)
        decomposition = decompose(regular, table)
        assert decomposition.multiplicities == (1, 1, 1)
        assert decomposition.is_effective
        assert decomposition.recombine(table) == regular

    def test_inner_product_with_trivial(self):
        group = symmetric_group(3)
        assert inner_product(ClassFunction.trivial(group), ClassFunction.regular(group)) == 1

    def test_non_virtual(self):
        table = character_table_cyclic(3)
        decomposition = decompose(ClassFunction(table.group, [1, 0, 0]), table)
        assert not decomposition.is_virtual
        assert not decomposition.is_effective
        assert decomposition.multiplicities[0] == Fraction(1, 3)

    def test_virtual_not_effective(self):
        table = character_table_cyclic(2)
        decomposition = decompose(ClassFunction(table.group, [0, 2]), table)
        assert decomposition.is_virtual
        assert not decomposition.is_effective
        assert decomposition.as_dict() == {"chi_0": 1, "chi_1": -1}

    def test_restrict_to_alternating(self):
        s3 = symmetric_group(3)
        table = character_table_symmetric(3, s3)
        a3 = s3.subgroup([[1, 2, 0]])
        restricted = restrict(table.irreducibles[table.index("[2,1]")], a3)
        assert restricted == ClassFunction(a3, [2, -1, -1])

    def test_restrict_to_non_subgroup(self):
        with pytest.raises(NotASubgroup):
            restrict(ClassFunction.trivial(cyclic_group(3)), cyclic_group(4))


class TestPowerCharacters:
    """Tests for symmetric and exterior power characters."""

    def test_sign_representation(self):
        group = cyclic_group(2)
        sym, ext = power_characters(group, [[[1]], [[-1]]], 3)
        assert [chi.values for chi in sym] == [(1, 1), (1, -1), (1, 1), (1, -1)]
        assert [chi.values for chi in ext] == [(1, 1), (1, -1)]

    @pytest.mark.parametrize(
        "name", ["square_action", "cube_action", "pi3_action", "pi4_symmetric_action"]
    )
    def test_power_sums_to_degree_eight(self, request, name):
        action = request.getfixturevalue(name)
        group = action.group
        rho = [action.rho_restricted(rep) for rep in group.class_representatives]
        sym, ext = power_characters(group, rho, 8)
        assert len(sym) == 9
        for index, matrix in enumerate(rho):
            m = Matrix(matrix)
            p = [None] + [int((m ** k).trace()) for k in range(1, 9)]
            h, e = [Fraction(1)], [Fraction(1)]
            for t in range(1, 9):
                h.append(sum(p[k] * h[t - k] for k in range(1, t + 1)) / t)
                e.append(sum((-1) ** (k - 1) * p[k] * e[t - k] for k in range(1, t + 1)) / t)
            assert [chi.values[index] for chi in sym] == h
            assert [chi.values[index] for chi in ext] == e[:len(ext)]
            assert all(v == 0 for v in e[len(ext):])

    @pytest.mark.parametrize("name", ["cube_action", "pi4_symmetric_action"])
    def test_truncated_inverse_of_det(self, request, name):
        action = request.getfixturevalue(name)
        group = action.group
        rho = [action.rho_restricted(rep) for rep in group.class_representatives]
        sym, ext = power_characters(group, rho, 8)
        for t in range(1, 9):
            total = ClassFunction.zero(group)
            for i, chi in enumerate(ext[:t + 1]):
                total = total + chi * sym[t - i] * (-1) ** i
            assert total == ClassFunction.zero(group), t


class TestPackageExports:
    """The groups package re-exports exactly what its modules publish."""

    def test_exports_match_modules(self):
        import equivariant_ehrhart.groups as package
        from equivariant_ehrhart.groups import characters, group

        assert set(package.__all__) == set(characters.__all__) | set(group.__all__)
        for name in package.__all__:
            assert getattr(package, name) is getattr(
                characters if name in characters.__all__ else group, name
            )
