"""Special Frobenius monoids and *-homomorphisms.

A monoid is stored as (carrier, mult, unit); the comonoid is always the
dagger of the monoid.  Verification covers associativity, unitality, the
Frobenius equation and (when claimed) specialness.  The FHilb centre solver
is the oracle behind Morita decisions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matkernel as mk
from .cdagcat import (
    CMor,
    CatObject,
    DualityWitness,
    FHILB,
    GHILB,
    compose,
    dagger_mor,
    dual_obj,
    identity,
    is_grade_preserving,
    left_cup,
    left_cap,
    tensor_mor,
    tensor_obj,
    trace_mor,
    unit_object,
)
from .errors import (
    DegenerateDimensionError,
    ShapeMismatchError,
    StructuralError,
    UnsupportedInstanceError,
)
from .matkernel import DEFAULT_TOL, Tolerance
from .report import Report


@dataclass(frozen=True)
class FrobeniusMonoid:
    carrier: CatObject
    mult: CMor   # carrier (x) carrier -> carrier
    unit: CMor   # unit -> carrier
    claim_special: bool = True

    def __post_init__(self):
        aa = tensor_obj(self.carrier, self.carrier)
        if self.mult.dom != aa or self.mult.cod != self.carrier:
            raise ShapeMismatchError("mult must map carrier^2 -> carrier")
        if self.unit.dom != unit_object(self.carrier) or self.unit.cod != self.carrier:
            raise ShapeMismatchError("unit must map unit object -> carrier")

    @property
    def comult(self) -> CMor:
        return dagger_mor(self.mult)

    @property
    def counit(self) -> CMor:
        return dagger_mor(self.unit)

    def pairing(self) -> CMor:
        """Frobenius form counit . mult : A (x) A -> unit."""
        return compose(self.mult, self.counit)

    def copairing(self) -> CMor:
        """comult . unit : unit -> A (x) A."""
        return compose(self.unit, self.comult)

    def structurally_equal(self, other: "FrobeniusMonoid") -> bool:
        return (self.carrier == other.carrier
                and np.array_equal(self.mult.mat, other.mult.mat)
                and np.array_equal(self.unit.mat, other.unit.mat))


def verify_frobenius(f: FrobeniusMonoid, tol: Tolerance = DEFAULT_TOL) -> Report:
    rep = Report("frobenius", tol.eps)
    a = f.carrier
    c = a.total_dim
    m, u = f.mult, f.unit
    # contract on reshaped structure tensors; the kron route would build
    # c^3 x c^3 intermediates for the associativity composite
    m3 = m.mat.reshape(c, c, c)
    d3 = np.conj(m3)                       # comult as d3[x, a, b] = conj(m3[x, a, b])
    uv = u.mat.reshape(c)
    eye = mk.eye(c)
    assoc_l = np.einsum("oxd,xab->oabd", m3, m3)
    assoc_r = np.einsum("oax,xbd->oabd", m3, m3)
    rep.add("associativity", tol.residual(assoc_l, assoc_r))
    rep.add("unit_left", tol.residual(np.einsum("a,oab->ob", uv, m3), eye))
    rep.add("unit_right", tol.residual(np.einsum("b,oab->oa", uv, m3), eye))
    mid = np.einsum("xab,xcd->abcd", d3, m3)
    frob_l = np.einsum("xab,oby->aoxy", d3, m3)
    rep.add("frobenius_left", tol.residual(frob_l, mid))
    frob_r = np.einsum("oxc,ycd->odxy", m3, d3)
    rep.add("frobenius_right", tol.residual(frob_r, mid))
    special_res = tol.residual(np.einsum("oab,pab->op", m3, np.conj(m3)), eye)
    if f.claim_special:
        rep.add("specialness", special_res)
    else:
        check = rep.add("specialness", special_res)
        check.status = "skipped" if check.status == "fail" else check.status
        check.witness = "not claimed special"
    if a.instance == GHILB:
        rep.add("mult_grading", is_grade_preserving(m, tol)[1])
        rep.add("unit_grading", is_grade_preserving(u, tol)[1])
    return rep


def pair_of_pants(w: DualityWitness, d: complex | None = None,
                  tol: Tolerance = DEFAULT_TOL) -> FrobeniusMonoid:
    """Special Frobenius monoid on X (x) Xd from a duality witness.

    Multiplication contracts the inner pair with the left cap and is scaled
    by 1/sqrt(d); the unit is the left cup scaled by sqrt(d), where d is the
    dimension scalar of the witness.
    """
    if d is None:
        d = trace_mor(identity(w.obj), w, side="left")
    d = complex(d)
    if abs(d) <= tol.eps:
        raise DegenerateDimensionError("dimension scalar too close to zero")
    root = np.sqrt(d)
    x, xd = w.obj, w.dual
    carrier = tensor_obj(x, xd)
    mult = tensor_mor(identity(x), tensor_mor(left_cap(w), identity(xd)))
    mult = CMor(mult.dom, mult.cod, mult.mat / root)
    unit = left_cup(w)
    unit = CMor(unit.dom, unit.cod, unit.mat * root)
    return FrobeniusMonoid(carrier, mult, unit, claim_special=True)


def trivial_monoid(like: CatObject | None = None) -> FrobeniusMonoid:
    from .cdagcat import fhilb
    u = unit_object(like) if like is not None else fhilb(1)
    one = np.ones((1, 1), dtype=complex)
    return FrobeniusMonoid(u, CMor(tensor_obj(u, u), u, one),
                           CMor(u, u, one), claim_special=True)


def pointwise_monoid(n: int) -> FrobeniusMonoid:
    """Diagonal algebra C^n: e_i (x) e_j -> delta_ij e_i, unit (1,..,1)."""
    from .cdagcat import fhilb
    a = fhilb(n)
    mult = np.zeros((n, n * n), dtype=complex)
    for i in range(n):
        mult[i, i * n + i] = 1.0
    unit = np.ones((n, 1), dtype=complex)
    return FrobeniusMonoid(a, CMor(tensor_obj(a, a), a, mult),
                           CMor(unit_object(a), a, unit), claim_special=True)


def group_algebra(group, normalized: bool = False) -> FrobeniusMonoid:
    """Convolution algebra of a finite group on C^|G|.

    Unnormalised convolution is associative and Frobenius but fails
    specialness (m m^dagger = |G| id); the 1/sqrt|G| rescaling repairs it.
    """
    from .cdagcat import fhilb
    n = group.order
    a = fhilb(n)
    mult = np.zeros((n, n * n), dtype=complex)
    for g in range(n):
        for h in range(n):
            mult[group.mul(g, h), g * n + h] = 1.0
    unit = np.zeros((n, 1), dtype=complex)
    unit[0, 0] = 1.0
    if normalized:
        mult /= np.sqrt(n)
        unit *= np.sqrt(n)
    return FrobeniusMonoid(a, CMor(tensor_obj(a, a), a, mult),
                           CMor(unit_object(a), a, unit),
                           claim_special=normalized)


def transport_monoid(u: CMor, a: FrobeniusMonoid) -> FrobeniusMonoid:
    """Push a monoid along a unitary u: A -> B."""
    if u.dom != a.carrier:
        raise ShapeMismatchError("unitary domain must be the monoid carrier")
    udag = dagger_mor(u)
    mult = compose(tensor_mor(udag, udag), a.mult, u)
    unit = compose(a.unit, u)
    return FrobeniusMonoid(u.cod, mult, unit, claim_special=a.claim_special)


def frobenius_transpose(f: CMor, a: FrobeniusMonoid, b: FrobeniusMonoid,
                        mirrored: bool = False) -> CMor:
    """Transpose of f: A -> B with respect to the Frobenius forms.

    Plain: (id_A (x) pair_B) . (id_A (x) f (x) id_B) . (copair_A (x) id_B).
    Mirrored places the copairing on the other side.
    """
    ia, ib = identity(a.carrier), identity(b.carrier)
    if not mirrored:
        return compose(
            tensor_mor(a.copairing(), ib),
            tensor_mor(ia, tensor_mor(f, ib)),
            tensor_mor(ia, b.pairing()),
        )
    return compose(
        tensor_mor(ib, a.copairing()),
        tensor_mor(ib, tensor_mor(f, ia)),
        tensor_mor(b.pairing(), ia),
    )


def check_star_morphism(f: CMor, a: FrobeniusMonoid, b: FrobeniusMonoid,
                        tol: Tolerance = DEFAULT_TOL) -> Report:
    """Certify f: A -> B as a unitary *-isomorphism.

    Reports the three *-homomorphism equations, the three *-cohomomorphism
    equations and unitarity; the verdict passes only if all do.  Also checks
    the implication "unitary homomorphism => cohomomorphism" on this instance.
    """
    if f.dom != a.carrier or f.cod != b.carrier:
        raise ShapeMismatchError("f must map carrier of a to carrier of b")
    rep = Report("star_morphism", tol.eps)
    fdag = dagger_mor(f)
    rep.add("hom_mult", tol.residual(
        compose(a.mult, f).mat, compose(tensor_mor(f, f), b.mult).mat))
    rep.add("hom_unit", tol.residual(compose(a.unit, f).mat, b.unit.mat))
    rep.add("hom_star", tol.residual(
        fdag.mat, frobenius_transpose(f, a, b).mat))
    rep.add("cohom_comult", tol.residual(
        compose(f, b.comult).mat, compose(a.comult, tensor_mor(f, f)).mat))
    rep.add("cohom_counit", tol.residual(
        compose(f, b.counit).mat, a.counit.mat))
    rep.add("cohom_star", tol.residual(
        fdag.mat, frobenius_transpose(f, a, b, mirrored=True).mat))
    iso_res = max(
        tol.residual(compose(f, fdag).mat, identity(b.carrier).mat),
        tol.residual(compose(fdag, f).mat, identity(a.carrier).mat),
    )
    rep.add("unitarity", iso_res)
    # unitary + homomorphism must force the cohomomorphism equations
    by_name = {c.name: c for c in rep.checks}
    hom_ok = all(by_name[n].status == "pass"
                 for n in ("hom_mult", "hom_unit", "hom_star", "unitarity"))
    cohom_ok = all(by_name[n].status == "pass"
                   for n in ("cohom_comult", "cohom_counit", "cohom_star"))
    rep.add("hom_implies_cohom", 0.0 if (not hom_ok or cohom_ok) else 1.0)
    return rep


def is_unitary_star_isomorphism(f: CMor, a: FrobeniusMonoid, b: FrobeniusMonoid,
                                tol: Tolerance = DEFAULT_TOL) -> bool:
    return check_star_morphism(f, a, b, tol).passed


def normalize_special(w: DualityWitness, tol: Tolerance = DEFAULT_TOL) -> DualityWitness:
    """Rescale a witness so the cap is a coisometry (cap cap^dagger = 1).

    The snake equations survive the rescaling; dagger-compatibility of the
    cup/cap pair is traded away unless the scale was already 1.  Idempotent.
    """
    d = trace_mor(identity(w.obj), w, side="left")
    if abs(d) <= tol.eps:
        raise DegenerateDimensionError("dimension scalar too close to zero")
    s = float(np.linalg.norm(w.cap.mat)) ** 2
    if s <= tol.eps:
        raise DegenerateDimensionError("cap norm too close to zero")
    root = np.sqrt(s)
    cup = CMor(w.cup.dom, w.cup.cod, w.cup.mat * root)
    cap = CMor(w.cap.dom, w.cap.cod, w.cap.mat / root)
    return DualityWitness(w.obj, w.dual, cup, cap)


def center_basis(a: FrobeniusMonoid, tol: Tolerance = DEFAULT_TOL) -> list[CMor]:
    """Orthonormal basis of {z: unit -> A | m(z (x) id) = m(id (x) z)}.

    FHilb only; the basis size counts the simple blocks of the algebra.
    """
    if a.carrier.instance != FHILB:
        raise UnsupportedInstanceError("center_basis is FHilb-only")
    n = a.carrier.total_dim
    m = a.mult.mat
    i_n = mk.eye(n)

    def constraint(z):
        return m @ mk.kron(z, i_n) - m @ mk.kron(i_n, z)

    basis = mk.linear_solution_space([constraint], (n, 1), tol)
    u = unit_object(a.carrier)
    return [CMor(u, a.carrier, z) for z in basis]
