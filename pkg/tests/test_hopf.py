"""Hopf algebra data: axioms, convolution, twisted antipode, admissibility."""

import pytest

from hopfcycl import (
    QQ,
    ZZ,
    Character,
    CyclotomicField,
    FiniteGroup,
    GroupLike,
    InvalidCharacter,
    LinMap,
    SparseMatrix,
    character_from_zeta,
    check_cm_triple,
    convolution,
    group_algebra,
    is_grouplike,
    trivial_character,
    twisted_antipode,
)
from hopfcycl.errors import HopfCyclError, RingMismatch


@pytest.mark.parametrize(
    "G,ring",
    [
        (FiniteGroup.cyclic(4), ZZ),
        (FiniteGroup.cyclic(3), QQ),
        (FiniteGroup.symmetric(3), QQ),
    ],
    ids=["Z4/Z", "Z3/Q", "S3/Q"],
)
def test_group_algebra_hopf_axioms(G, ring):
    H = group_algebra(G, ring)
    report = H.verify_axioms()
    assert report == {k: True for k in report}


def test_iterated_coproduct_of_grouplike():
    H = group_algebra(FiniteGroup.cyclic(3), QQ)
    assert H.iterated_coproduct_basis(2, 3) == {(2, 2, 2): QQ.one}
    assert H.iterated_coproduct_basis(1, 1) == {(1,): QQ.one}
    with pytest.raises(ValueError):
        H.iterated_coproduct_basis(0, 0)


def test_convolution_antipode_inverse_to_identity():
    H = group_algebra(FiniteGroup.symmetric(3), QQ)
    ident = LinMap.identity(H)
    S = LinMap.antipode(H)
    e = LinMap.unit_counit(H)
    assert convolution(ident, S) == e
    assert convolution(S, ident) == e
    assert convolution(ident, e) == ident
    assert convolution(e, ident) == ident


def test_convolution_associativity_mixed_targets():
    H = group_algebra(FiniteGroup.cyclic(4), QQ)
    zeta = QQ.neg(QQ.one)  # order-2 character of Z/4
    chi = LinMap.from_character(H, character_from_zeta(QQ, 4, zeta))
    S = LinMap.antipode(H)
    ident = LinMap.identity(H)
    lhs = convolution(convolution(chi, S), ident)
    rhs = convolution(chi, convolution(S, ident))
    assert lhs == rhs
    # k-valued times k-valued stays k-valued
    eps = LinMap.counit(H)
    assert convolution(chi, eps).target == "k"
    assert convolution(chi, eps).data == chi.data


def test_convolution_across_hopf_algebras_rejected():
    H1 = group_algebra(FiniteGroup.cyclic(2), QQ)
    H2 = group_algebra(FiniteGroup.cyclic(2), QQ)
    with pytest.raises(RingMismatch):
        convolution(LinMap.identity(H1), LinMap.identity(H2))


def test_character_validate():
    G = FiniteGroup.cyclic(4)
    H = group_algebra(G, QQ)
    trivial_character(G, QQ).validate(H.algebra)
    character_from_zeta(QQ, 4, QQ.neg(QQ.one)).validate(H.algebra)
    with pytest.raises(InvalidCharacter):
        Character(QQ, [QQ.one, QQ.from_int(2), QQ.one, QQ.one]).validate(H.algebra)
    with pytest.raises(InvalidCharacter):
        Character(QQ, [QQ.zero] * 4).validate(H.algebra)
    with pytest.raises(InvalidCharacter):
        character_from_zeta(QQ, 4, QQ.from_int(2))


def test_character_call_on_vectors():
    G = FiniteGroup.cyclic(3)
    K = CyclotomicField(3)
    chi = character_from_zeta(K, 3, K.zeta)
    assert chi(1) == K.zeta
    assert chi({0: K.one, 1: K.one, 2: K.one}) == K.sum(K.zeta_pow(i) for i in range(3))


def test_is_grouplike():
    H = group_algebra(FiniteGroup.cyclic(3), QQ)
    for g in range(3):
        assert is_grouplike(H, {g: QQ.one})
    assert not is_grouplike(H, {0: QQ.one, 1: QQ.one})
    assert not is_grouplike(H, {1: QQ.from_int(2)})


def test_twisted_antipode_on_group_algebra():
    G = FiniteGroup.cyclic(5)
    H = group_algebra(G, QQ)
    pi = 2
    S_pi = twisted_antipode(H, GroupLike.from_vector({pi: QQ.one}))
    for a in range(5):
        assert S_pi.column(a) == {(pi - a) % 5: QQ.one}


def test_check_cm_triple_group_algebra():
    G = FiniteGroup.cyclic(4)
    K = CyclotomicField(4)
    H = group_algebra(G, K)
    eps = trivial_character(G, K)
    for pi in range(4):
        triple = check_cm_triple(H, GroupLike.from_vector({pi: K.one}), eps, eps)
        assert triple.valid and triple.failures == ()
    # alpha(pi) != 1 must be flagged
    alpha = character_from_zeta(K, 4, K.zeta)
    triple = check_cm_triple(H, GroupLike.from_vector({1: K.one}), alpha, alpha)
    assert not triple.valid
    assert "character value at grouplike is not 1" in triple.failures
    # alpha(pi) = 1 with pi = g^0 is fine even for a nontrivial character
    triple = check_cm_triple(H, GroupLike.from_vector({0: K.one}), alpha, alpha)
    assert triple.valid


def test_grouplike_round_trip():
    vec = {2: QQ.one}
    assert GroupLike.from_vector(vec).as_vector() == vec


def test_linmap_guards():
    H = group_algebra(FiniteGroup.cyclic(2), QQ)
    eps = LinMap.counit(H)
    with pytest.raises(HopfCyclError):
        eps.as_matrix()
    with pytest.raises(ValueError):
        LinMap(H, "X", None)
    assert LinMap.identity(H).as_matrix() == SparseMatrix.identity(QQ, 2)
