"""Dagger bimodules over special Frobenius monoids.

Relative tensor products are computed by splitting the canonical dagger
idempotent on M (x) N; Morita equivalence is certified by exhibiting unitary
bimodule isomorphisms onto the regular bimodules.  Isomorphism search is
randomised with an explicit seed: a returned unitary is a proof, exhaustion
is merely inconclusive, and unequal carrier dimensions are a definitive no.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matkernel as mk
from .cdagcat import (
    CMor,
    CatObject,
    FHILB,
    GHILB,
    compose,
    dagger_mor,
    fhilb,
    ghilb_from_grades,
    identity,
    is_grade_preserving,
    tensor_mor,
    tensor_obj,
    unit_object,
)
from .errors import NotAnIdempotentError, ShapeMismatchError, StructuralError
from .frobenius import FrobeniusMonoid, center_basis, pair_of_pants, trivial_monoid
from .matkernel import DEFAULT_SEED, DEFAULT_TOL, Tolerance
from .report import INCONCLUSIVE, Report

DEFAULT_ATTEMPTS = 8


@dataclass(frozen=True)
class DaggerBimodule:
    left: FrobeniusMonoid
    right: FrobeniusMonoid
    carrier: CatObject
    action: CMor  # A (x) M (x) B -> M

    def __post_init__(self):
        dom = tensor_obj(tensor_obj(self.left.carrier, self.carrier),
                         self.right.carrier)
        if self.action.dom != dom or self.action.cod != self.carrier:
            raise ShapeMismatchError("action must map A (x) M (x) B -> M")


def verify_bimodule(m: DaggerBimodule, tol: Tolerance = DEFAULT_TOL) -> Report:
    rep = Report("bimodule", tol.eps)
    a, b = m.left, m.right
    ia, ib, im = identity(a.carrier), identity(b.carrier), identity(m.carrier)
    rho = m.action
    lhs = compose(tensor_mor(tensor_mor(a.mult, im), b.mult), rho)
    rhs = compose(tensor_mor(tensor_mor(ia, rho), ib), rho)
    rep.add("associativity", tol.residual(lhs.mat, rhs.mat))
    unit_act = compose(tensor_mor(tensor_mor(a.unit, im), b.unit), rho)
    rep.add("unitality", tol.residual(unit_act.mat, im.mat))
    # rho recovered from rho^dagger through the Frobenius pairings
    bent = compose(
        tensor_mor(tensor_mor(ia, dagger_mor(rho)), ib),
        tensor_mor(tensor_mor(a.pairing(), im), b.pairing()),
    )
    rep.add("dagger_compatibility", tol.residual(bent.mat, rho.mat))
    if m.carrier.instance == GHILB:
        rep.add("action_grading", is_grade_preserving(rho, tol)[1])
    return rep


def regular_bimodule(a: FrobeniusMonoid) -> DaggerBimodule:
    """A as an (A,A)-bimodule, acting by multiplication on both sides."""
    ia = identity(a.carrier)
    action = compose(tensor_mor(a.mult, ia), a.mult)
    return DaggerBimodule(a, a, a.carrier, action)


def left_module_bimodule(a: FrobeniusMonoid, carrier: CatObject,
                         left_action: CMor) -> DaggerBimodule:
    """Wrap a left A-action rho_l: A (x) M -> M as an (A, trivial)-bimodule.

    The trivial monoid lives on the strict unit object, so A (x) M (x) 1 is
    literally A (x) M and the left action serves unchanged.
    """
    triv = trivial_monoid(carrier)
    return DaggerBimodule(a, triv, carrier, left_action)


def column_bimodule(n: int) -> DaggerBimodule:
    """C^n as a (pair_of_pants(n), trivial) bimodule with the matrix action."""
    from .cdagcat import standard_duality
    pants = pair_of_pants(standard_duality(fhilb(n)))
    x = fhilb(n)
    # (X (x) Xd) (x) M -> M, contraction scaled to match the pants mult.
    act = np.zeros((n, n * n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            act[i, (i * n + j) * n + j] = 1.0
    act /= np.sqrt(n)
    left_action = CMor(tensor_obj(pants.carrier, x), x, act)
    return left_module_bimodule(pants, x, left_action)


def row_bimodule(n: int) -> DaggerBimodule:
    """Dual columns: C^n as a (trivial, pair_of_pants(n)) bimodule."""
    from .cdagcat import standard_duality
    pants = pair_of_pants(standard_duality(fhilb(n)))
    x = fhilb(n)
    triv = trivial_monoid(x)
    # M (x) (X (x) Xd) -> M: dual-pairing contraction, same normalisation.
    act = np.zeros((n, n * n * n), dtype=complex)
    for c in range(n):
        for a in range(n):
            for b in range(n):
                if c == a:
                    act[b, c * n * n + a * n + b] = 1.0
    act /= np.sqrt(n)
    right_action = CMor(tensor_obj(x, pants.carrier), x, act)
    return DaggerBimodule(triv, pants, x, right_action)


def relative_tensor_idempotent(m: DaggerBimodule, n: DaggerBimodule) -> CMor:
    """The canonical endomorphism of M (x) N whose image is M (x)_B N."""
    if not m.right.structurally_equal(n.left):
        raise StructuralError("middle monoids must be bit-identical")
    b = m.right
    im, in_ = identity(m.carrier), identity(n.carrier)
    stage = tensor_mor(
        tensor_mor(tensor_mor(tensor_mor(m.left.unit, im), b.copairing()), in_),
        n.right.unit,
    )
    act = tensor_mor(m.action, n.action)
    comp = compose(stage, act)
    return CMor(tensor_obj(m.carrier, n.carrier),
                tensor_obj(m.carrier, n.carrier), comp.mat)


def _split_carrier(p: CMor, tol: Tolerance):
    """Split a dagger idempotent, gradewise for GHilb carriers."""
    obj = p.dom
    if obj.instance == FHILB:
        v, rank = mk.split_dagger_idempotent(p.mat, tol)
        return CMor(fhilb(rank), obj, v)
    grades = obj.grades
    blocks: dict[int, list[int]] = {}
    for idx, g in enumerate(grades):
        blocks.setdefault(g, []).append(idx)
    off_grade = max(
        (abs(p.mat[i, j]) for i in range(obj.dim) for j in range(obj.dim)
         if grades[i] != grades[j]), default=0.0)
    if off_grade > tol.eps * max(1.0, float(np.linalg.norm(p.mat))):
        raise NotAnIdempotentError("idempotent is not grade-preserving")
    cols, new_grades = [], []
    for g in sorted(blocks):
        idxs = blocks[g]
        sub = p.mat[np.ix_(idxs, idxs)]
        v, rank = mk.split_dagger_idempotent(sub, tol)
        for k in range(rank):
            col = np.zeros((obj.dim, 1), dtype=complex)
            col[idxs, 0] = v[:, k]
            cols.append(col)
            new_grades.append(g)
    vmat = np.hstack(cols) if cols else np.zeros((obj.dim, 0), dtype=complex)
    img = ghilb_from_grades(obj.group, new_grades)
    return CMor(img, obj, vmat)


def relative_tensor(m: DaggerBimodule, n: DaggerBimodule,
                    tol: Tolerance = DEFAULT_TOL):
    """(M (x)_B N as an (A,C)-bimodule, inclusion isometry)."""
    p = relative_tensor_idempotent(m, n)
    try:
        incl = _split_carrier(p, tol)
    except NotAnIdempotentError as exc:
        raise NotAnIdempotentError(
            f"relative tensor idempotent failed to split: {exc}") from exc
    a, c = m.left, n.right
    ia, ic = identity(a.carrier), identity(c.carrier)
    left_act = compose(
        tensor_mor(tensor_mor(ia, identity(m.carrier)), m.right.unit),
        m.action,
    )  # A (x) M -> M
    right_act = compose(
        tensor_mor(tensor_mor(n.left.unit, identity(n.carrier)), ic),
        n.action,
    )  # N (x) C -> N
    middle = tensor_mor(left_act, right_act)
    action = compose(
        tensor_mor(tensor_mor(ia, incl), ic),
        middle,
        dagger_mor(incl),
    )
    out = DaggerBimodule(a, c, incl.dom, action)
    return out, incl


def bimodule_morphism_space(m: DaggerBimodule, n: DaggerBimodule,
                            tol: Tolerance = DEFAULT_TOL) -> list[CMor]:
    """Orthonormal basis of bimodule morphisms M -> N."""
    if not (m.left.structurally_equal(n.left)
            and m.right.structurally_equal(n.right)):
        raise StructuralError("bimodules must share both monoids")
    da, db = m.left.carrier.total_dim, m.right.carrier.total_dim
    dm, dn = m.carrier.total_dim, n.carrier.total_dim

    def intertwine(t):
        lift = mk.kron(mk.kron(mk.eye(da), t), mk.eye(db))
        return t @ m.action.mat - n.action.mat @ lift

    constraints = [intertwine]
    if m.carrier.instance == GHILB:
        # morphisms of GHilb are grade-preserving by definition
        mask = np.array([[1.0 if n.carrier.grades[p] != m.carrier.grades[q] else 0.0
                          for q in range(dm)] for p in range(dn)])
        constraints.append(lambda t: t * mask)
    basis = mk.linear_solution_space(constraints, (dn, dm), tol)
    return [CMor(m.carrier, n.carrier, t) for t in basis]


@dataclass
class IsoSearchResult:
    iso: CMor | None
    definitive_negative: bool
    attempts_used: int

    @property
    def found(self) -> bool:
        return self.iso is not None

    @property
    def status(self) -> str:
        if self.found:
            return "pass"
        return "fail" if self.definitive_negative else INCONCLUSIVE


def find_unitary_bimodule_iso(m: DaggerBimodule, n: DaggerBimodule,
                              tol: Tolerance = DEFAULT_TOL,
                              seed: int = DEFAULT_SEED,
                              attempts: int = DEFAULT_ATTEMPTS) -> IsoSearchResult:
    """Search for a unitary bimodule isomorphism M -> N.

    Attempt 0 is the identity when carriers coincide; later attempts draw a
    random element of the morphism space and take its unitary polar factor.
    A returned morphism is always re-certified before being reported.
    """
    if m.carrier.total_dim != n.carrier.total_dim:
        return IsoSearchResult(None, True, 0)

    def certify(t: CMor) -> bool:
        dm = t.mat.shape[1]
        if tol.residual(mk.dagger(t.mat) @ t.mat, mk.eye(dm)) > tol.eps:
            return False
        if tol.residual(t.mat @ mk.dagger(t.mat), mk.eye(dm)) > tol.eps:
            return False
        lift = mk.kron(mk.kron(mk.eye(m.left.carrier.total_dim), t.mat),
                       mk.eye(m.right.carrier.total_dim))
        return tol.residual(t.mat @ m.action.mat, n.action.mat @ lift) <= tol.eps

    if m.carrier == n.carrier:
        ident = CMor(m.carrier, n.carrier, mk.eye(m.carrier.total_dim))
        if certify(ident):
            return IsoSearchResult(ident, False, 0)
    basis = bimodule_morphism_space(m, n, tol)
    if not basis:
        # empty morphism space between equal-dimension carriers: no unitary
        # can exist, and linear solving is exhaustive here
        return IsoSearchResult(None, True, 0)
    rng = np.random.default_rng(seed)
    for k in range(1, attempts + 1):
        coeffs = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
        cand = sum(c * t.mat for c, t in zip(coeffs, basis))
        try:
            u = mk.polar_unitary(cand, tol)
        except Exception:
            continue
        t = CMor(m.carrier, n.carrier, u)
        if certify(t):
            return IsoSearchResult(t, False, k)
    return IsoSearchResult(None, False, attempts)


def verify_morita_witness(a: FrobeniusMonoid, b: FrobeniusMonoid,
                          m: DaggerBimodule, n: DaggerBimodule,
                          tol: Tolerance = DEFAULT_TOL,
                          seed: int = DEFAULT_SEED,
                          attempts: int = DEFAULT_ATTEMPTS) -> Report:
    """Certify (M, N) as a Morita equivalence between A and B."""
    rep = Report("morita_witness", tol.eps)
    if not (m.left.structurally_equal(a) and m.right.structurally_equal(b)
            and n.left.structurally_equal(b) and n.right.structurally_equal(a)):
        raise StructuralError("witness bimodules do not match the monoids")
    rep.extend(verify_bimodule(m, tol), prefix="m.")
    rep.extend(verify_bimodule(n, tol), prefix="n.")
    if (a.carrier.instance == FHILB and b.carrier.instance == FHILB):
        ca, cb = len(center_basis(a, tol)), len(center_basis(b, tol))
        rep.add("center_obstruction", 0.0 if ca == cb else 1.0,
                witness=f"center dims {ca} vs {cb}")
    mn, _ = relative_tensor(m, n, tol)
    nm, _ = relative_tensor(n, m, tol)
    res_a = find_unitary_bimodule_iso(mn, regular_bimodule(a), tol, seed, attempts)
    rep.add_status("MxN_iso_regular_A", res_a.status)
    res_b = find_unitary_bimodule_iso(nm, regular_bimodule(b), tol, seed, attempts)
    rep.add_status("NxM_iso_regular_B", res_b.status)
    return rep


def morita_decide_fhilb(a: FrobeniusMonoid, b: FrobeniusMonoid,
                        tol: Tolerance = DEFAULT_TOL) -> bool:
    """FHilb Morita oracle: equal centre dimension iff Morita equivalent."""
    return len(center_basis(a, tol)) == len(center_basis(b, tol))
