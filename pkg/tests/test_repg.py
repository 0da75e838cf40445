import itertools

import numpy as np
import pytest

from pivotfun import matkernel as mk
from pivotfun.errors import StructuralError
from pivotfun.groups import FiniteGroup, cyclic, direct_product, klein_four, verify_group
from pivotfun.repg import (
    Cocycle,
    FibreFunctor,
    ObjectList,
    canonical_fibre_functor,
    character_list,
    characters,
    conjugate_rep,
    intertwiner_basis,
    klein_pauli_cocycle,
    regular_rep,
    sign_rep,
    tensor_rep,
    trivial_rep,
    twisted_fibre_functor,
    verify_cocycle,
    verify_fibre_functor,
    verify_rep,
)


def test_verify_group_z2():
    assert verify_group(cyclic(2).table).passed


def test_verify_group_klein_brute_force():
    table = klein_four().table
    # oracle: brute-force all triples outside the verifier
    for g, h, k in itertools.product(range(4), repeat=3):
        assert table[table[g][h]][k] == table[g][table[h][k]]
    assert verify_group(table).passed


def test_verify_group_corrupted_table_names_witness():
    table = [list(r) for r in cyclic(3).table]
    table[1][2], table[2][2] = table[2][2], table[1][2]
    rep = verify_group(table)
    assert not rep.passed
    by = {c.name: c for c in rep.checks}
    assert by["associativity"].status == "fail"
    assert by["associativity"].witness.startswith("triple=")


def test_group_json_round_trip(klein):
    g = FiniteGroup.from_json(klein.to_json())
    assert g.table == klein.table
    with pytest.raises(StructuralError):
        FiniteGroup.from_json({"order": 2, "table": [[0, 1], [1, 1]]})


def test_characters_z2(z2):
    chars = characters(z2)
    assert len(chars) == 2
    assert chars[0].mats[1][0, 0] == pytest.approx(1.0)
    assert chars[1].mats[1][0, 0] == pytest.approx(-1.0)


def test_characters_z3(z3, tol):
    chars = characters(z3)
    assert len(chars) == 3
    omega = np.exp(2j * np.pi / 3)
    got = {complex(np.round(c.mats[1][0, 0], 9)) for c in chars}
    expected = {complex(np.round(w, 9)) for w in (1.0, omega, omega ** 2)}
    assert got == expected
    for c in chars:
        assert verify_rep(c, tol).passed


def test_characters_klein(klein, tol):
    chars = characters(klein)
    assert len(chars) == 4
    for c in chars:
        assert verify_rep(c, tol).passed
        assert all(abs(m[0, 0].imag) < 1e-12 for m in c.mats)


def test_regular_rep_is_unitary_homomorphism(tol, z3):
    assert verify_rep(regular_rep(z3), tol).passed


def test_rep_verifier_rejects_broken_homomorphism(tol, z2):
    r = regular_rep(z2)
    broken = type(r)(z2, (r.mats[0], np.diag([1.0, 2.0]).astype(complex)))
    rep = verify_rep(broken, tol)
    by = {c.name: c for c in rep.checks}
    assert by["homomorphism"].status == "fail"
    assert by["unitarity"].status == "fail"


def test_intertwiner_dimensions(tol, z2):
    triv = trivial_rep(z2)
    sgn = sign_rep(z2)
    reg = regular_rep(z2)
    assert len(intertwiner_basis(triv, triv, tol)) == 1
    # oracle: character orthogonality, <triv, sign> = 0
    assert len(intertwiner_basis(sgn, triv, tol)) == 0
    assert len(intertwiner_basis(reg, reg, tol)) == 2


def test_object_list_requires_trivial_first(z2):
    with pytest.raises(StructuralError):
        ObjectList(z2, (sign_rep(z2), trivial_rep(z2)))


def test_object_list_tensor_and_dual_tables(z2_objs):
    # characters of Z2: chi_i (x) chi_j = chi_{i+j}, self-dual
    assert z2_objs.tensor_index(1, 1) == 0
    assert z2_objs.tensor_index(0, 1) == 1
    assert z2_objs.dual_index(1) == 1
    assert z2_objs.separates_elements()


def test_object_list_flags_non_separating(z2):
    only_trivial = ObjectList(z2, (trivial_rep(z2),))
    assert not only_trivial.separates_elements()


def test_canonical_functor_residuals_zero(z2_objs, klein_objs, tol):
    for objs in (z2_objs, klein_objs):
        rep = verify_fibre_functor(canonical_fibre_functor(objs), tol)
        assert rep.passed
        assert rep.max_residual == 0.0


def test_pauli_cocycle_brute_force(klein_objs):
    # oracle: check the 2-cocycle identity over all 64 triples directly
    psi = klein_pauli_cocycle(klein_objs)
    t = psi.table
    prod = [[klein_objs.tensor_index(i, j) for j in range(4)] for i in range(4)]
    for i, j, k in itertools.product(range(4), repeat=3):
        lhs = t[i, j] * t[prod[i][j], k]
        rhs = t[j, k] * t[i, prod[j][k]]
        assert abs(lhs - rhs) < 1e-12
    assert any(t[i, j] == -1 for i in range(4) for j in range(4))
    assert verify_cocycle(psi).passed


def test_twisted_functor_klein_passes(klein_objs, tol):
    psi = klein_pauli_cocycle(klein_objs)
    f = twisted_fibre_functor(klein_objs, psi, tol)
    rep = verify_fibre_functor(f, tol)
    assert rep.passed, [c.name for c in rep.failures()]
    by = {c.name: c for c in rep.checks}
    assert by["pivotality"].status == "pass"
    assert by["associativity"].status == "pass"


def test_trivial_cocycle_gives_canonical(klein_objs, tol):
    psi = Cocycle(klein_objs, np.ones((4, 4), dtype=complex))
    f = twisted_fibre_functor(klein_objs, psi, tol)
    g = canonical_fibre_functor(klein_objs)
    assert f.structurally_equal(g)


def test_non_cocycle_phase_table_fails(klein_objs, tol):
    table = np.ones((4, 4), dtype=complex)
    table[1, 1] = -1.0  # breaks the cocycle identity but stays normalised
    psi = Cocycle(klein_objs, table)
    rep = verify_cocycle(psi, tol)
    by = {c.name: c for c in rep.checks}
    assert by["cocycle_identity"].status == "fail"
    assert by["cocycle_identity"].witness.startswith("triple=")
    with pytest.raises(AssertionError):
        twisted_fibre_functor(klein_objs, psi, tol)


def test_functor_with_non_unitary_multiplicator_fails(z2_objs, tol):
    f = canonical_fibre_functor(z2_objs)
    mult = dict(f.mult)
    mult[(1, 1)] = np.array([[2.0]], dtype=complex)
    bad = FibreFunctor(z2_objs, mult, f.unitor)
    rep = verify_fibre_functor(bad, tol)
    by = {c.name: c for c in rep.checks}
    assert by["multiplicators_unitary"].status == "fail"


def test_conjugate_rep_is_dual(tol, z3):
    chars = characters(z3)
    for c in chars:
        conj = conjugate_rep(c)
        # dual of a character is its inverse
        prod = tensor_rep(c, conj)
        assert all(abs(m[0, 0] - 1.0) < 1e-9 for m in prod.mats)


def test_direct_product_group_order():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6
    assert verify_group(g.table).passed
