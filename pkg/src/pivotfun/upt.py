"""Unitary pseudonatural transformations between fibre functors.

A transformation alpha: F1 -> F2 is a carrier Hilbert space H together with
one component alpha_X: F1(X) (x) H -> H (x) F2(X) per listed object.  The
dagger bends the daggered component around cups and caps on H; the right
dual bends the component at the dual object and threads the functors'
induced cups and caps.  Diagram-to-matrix compilation reads the pictures
left to right, bottom to top; the graded oracle pins that convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import matkernel as mk
from .cdagcat import CMor, fhilb, tensor_obj, unit_object
from .errors import DegenerateDimensionError, ShapeMismatchError, StructuralError
from .frobenius import FrobeniusMonoid, check_star_morphism, verify_frobenius
from .groups import FiniteGroup
from .matkernel import DEFAULT_SEED, DEFAULT_TOL, Tolerance
from .repg import FibreFunctor, ObjectList, canonical_fibre_functor, induced_duality_mats
from .report import INCONCLUSIVE, Report


def _pattern(n: int) -> np.ndarray:
    """Index-matched cup column of size n^2."""
    c = np.zeros((n * n, 1), dtype=complex)
    for i in range(n):
        c[i * n + i, 0] = 1.0
    return c


@dataclass(frozen=True)
class UPT:
    source: FibreFunctor
    target: FibreFunctor
    dim: int
    components: dict          # object index -> ndarray (h d) x (d h)
    claim_unitary: bool = True

    def __post_init__(self):
        if len(self.source.objects) != len(self.target.objects):
            raise StructuralError("source and target functors disagree on objects")
        comps = {}
        for i in range(len(self.source.objects)):
            if i not in self.components:
                raise StructuralError(f"missing component for object {i}")
            m = mk.as_matrix(self.components[i])
            d = self.source.dim(i)
            if m.shape != (self.dim * d, d * self.dim):
                raise ShapeMismatchError(
                    f"component {i} has shape {m.shape}, expected "
                    f"({self.dim * d}, {d * self.dim})")
            comps[i] = m
        object.__setattr__(self, "components", comps)

    @property
    def objects(self) -> ObjectList:
        return self.source.objects

    def component(self, i: int) -> np.ndarray:
        return self.components[i]


@dataclass(frozen=True)
class Modification:
    source: UPT
    target: UPT
    mat: np.ndarray           # H_source -> H_target

    def __post_init__(self):
        m = mk.as_matrix(self.mat)
        if m.shape != (self.target.dim, self.source.dim):
            raise ShapeMismatchError("modification matrix has wrong shape")
        object.__setattr__(self, "mat", m)


def upt_equal(a: UPT, b: UPT) -> bool:
    """Bit-identical comparison of two transformations."""
    return (a.dim == b.dim
            and a.source.structurally_equal(b.source)
            and a.target.structurally_equal(b.target)
            and all(np.array_equal(a.component(i), b.component(i))
                    for i in range(len(a.objects))))


def identity_upt(f: FibreFunctor) -> UPT:
    comps = {i: mk.eye(f.dim(i)) for i in range(len(f.objects))}
    return UPT(f, f, 1, comps)


def twist_upt(f: FibreFunctor, g: int) -> UPT:
    """Dimension-1 transformation f -> f evaluating each object at g."""
    comps = {i: f.objects.reps[i].mats[g].copy()
             for i in range(len(f.objects))}
    return UPT(f, f, 1, comps)


def graded_upt(group: FiniteGroup, mult, objs: ObjectList) -> UPT:
    """The G-graded oracle: H = (+)_g H_g, alpha_X(x (x) h_g) = h_g (x) rho_X(g) x."""
    if len(mult) != group.order:
        raise StructuralError("multiplicity vector must be indexed by the group")
    if objs.group != group:
        raise StructuralError("object list lives over a different group")
    grades = [g for g in range(group.order) for _ in range(mult[g])]
    h = len(grades)
    if h == 0:
        raise StructuralError("graded carrier must be nonzero")
    func = canonical_fibre_functor(objs)
    comps = {}
    for i, rep in enumerate(objs.reps):
        d = rep.dim
        m = np.zeros((h * d, d * h), dtype=complex)
        for pos, g in enumerate(grades):
            rho = rep.mats[g]
            for b in range(d):
                for a in range(d):
                    m[pos * d + b, a * h + pos] = rho[b, a]
        comps[i] = m
    return UPT(func, func, h, comps)


def carrier_grades(mult) -> list[int]:
    return [g for g in range(len(mult)) for _ in range(mult[g])]


def _same_functor(f: FibreFunctor, g: FibreFunctor):
    if not f.structurally_equal(g):
        raise StructuralError("functors must be bit-identical")


def upt_compose(a: UPT, b: UPT) -> UPT:
    """Composite a (x) b: carrier H_a (x) H_b, a's target feeding b's source."""
    if not (a.claim_unitary and b.claim_unitary):
        raise StructuralError("composition is restricted to unitary transformations")
    _same_functor(a.target, b.source)
    ha, hb = a.dim, b.dim
    comps = {}
    for i in range(len(a.objects)):
        comps[i] = mk.kron(mk.eye(ha), b.component(i)) @ mk.kron(
            a.component(i), mk.eye(hb))
    return UPT(a.source, b.target, ha * hb, comps)


def upt_dagger(a: UPT) -> UPT:
    """Componentwise dagger, bent by the standard cup and cap on H."""
    h = a.dim
    cup = _pattern(h)
    cap = cup.T
    comps = {}
    for i in range(len(a.objects)):
        d = a.source.dim(i)
        adag = mk.dagger(a.component(i))
        stage1 = mk.kron(cup, mk.eye(d * h))
        stage2 = mk.kron(mk.eye(h), mk.kron(adag, mk.eye(h)))
        stage3 = mk.kron(mk.eye(h * d), cap)
        comps[i] = stage3 @ stage2 @ stage1
    return UPT(a.target, a.source, h, comps, claim_unitary=a.claim_unitary)


def _require_dual(objs: ObjectList, i: int, tol: Tolerance) -> int:
    di = objs.dual_index(i, tol)
    if di is None:
        raise StructuralError(
            f"object {i} has no listed dual; duality construction unavailable")
    return di


def upt_dual(a: UPT, tol: Tolerance = DEFAULT_TOL) -> UPT:
    """Right dual a*: components are the component at the dual object,
    bent through the functors' induced left cups/caps and the standard
    duality on H."""
    h = a.dim
    cup_h = _pattern(h)
    cap_h = cup_h.T
    comps = {}
    for i in range(len(a.objects)):
        di = _require_dual(a.objects, i, tol)
        d = a.source.dim(i)
        lcup1 = induced_duality_mats(a.source, i, tol)[2]   # 1 -> F1(X)F1(Xd)
        lcap2 = induced_duality_mats(a.target, i, tol)[3]   # F2(Xd)F2(X) -> 1
        comp_d = a.component(di)
        stage1 = mk.kron(cup_h, mk.eye(d * h))
        stage2 = mk.kron(mk.eye(h), mk.kron(lcup1, mk.eye(h * d * h)))
        stage3 = mk.kron(mk.eye(h * d), mk.kron(comp_d, mk.eye(d * h)))
        stage4 = mk.kron(mk.eye(h * d * h), mk.kron(lcap2, mk.eye(h)))
        stage5 = mk.kron(mk.eye(h * d), cap_h)
        comps[i] = stage5 @ stage4 @ stage3 @ stage2 @ stage1
    return UPT(a.target, a.source, h, comps, claim_unitary=a.claim_unitary)


def upt_dual_left(a: UPT, tol: Tolerance = DEFAULT_TOL) -> UPT:
    """Left dual *a, built with the opposite transposition.

    Uses the induced cups/caps on the other side of the functor images and
    the daggered duality on H; for unitary transformations it coincides
    with the right dual.
    """
    h = a.dim
    lcup_h = _pattern(h)      # 1 -> H (x) H*
    lcap_h = lcup_h.T         # H* (x) H -> 1
    comps = {}
    for i in range(len(a.objects)):
        di = _require_dual(a.objects, i, tol)
        d = a.source.dim(i)
        cup1 = induced_duality_mats(a.source, i, tol)[0]    # 1 -> F1(Xd)F1(X)
        cap2 = induced_duality_mats(a.target, i, tol)[1]    # F2(X)F2(Xd) -> 1
        comp_d = a.component(di)
        inner = mk.kron(mk.eye(d), mk.kron(lcup_h, mk.eye(d))) @ cup1
        stage1 = mk.kron(mk.eye(d * h), inner)
        stage2 = mk.kron(mk.eye(d * h), mk.kron(comp_d, mk.eye(h * d)))
        stage3 = mk.kron(mk.eye(d), mk.kron(lcap_h, mk.eye(d * h * d)))
        stage4 = mk.kron(cap2, mk.eye(h * d))
        comps[i] = stage4 @ stage3 @ stage2 @ stage1
    return UPT(a.target, a.source, h, comps, claim_unitary=a.claim_unitary)


def dual_distance(a: UPT, tol: Tolerance = DEFAULT_TOL) -> float:
    """Componentwise normalised distance between the dagger and the right dual."""
    dag = upt_dagger(a)
    dua = upt_dual(a, tol)
    return max(
        tol.residual(dag.component(i), dua.component(i))
        for i in range(len(a.objects)))


def verify_upt(a: UPT, tol: Tolerance = DEFAULT_TOL,
               cross_check: bool = True) -> Report:
    rep = Report("upt", tol.eps)
    objs = a.objects
    n = len(objs)
    h = a.dim
    if not a.source.objects is a.target.objects and \
            len(a.source.objects) != len(a.target.objects):
        raise StructuralError("endpoint functors disagree")

    worst_nat, wit_nat = 0.0, None
    for i in range(n):
        for k in range(n):
            for b, t in enumerate(objs.intertwiners(i, k, tol)):
                lhs = a.component(k) @ mk.kron(t, mk.eye(h))
                rhs = mk.kron(mk.eye(h), t) @ a.component(i)
                r = tol.residual(lhs, rhs)
                if r > worst_nat:
                    worst_nat, wit_nat = r, f"pair=({i}->{k}) basis={b}"
    rep.add("naturality", worst_nat, witness=wit_nat)

    worst_mon, wit_mon = 0.0, None
    skipped = 0
    for i in range(n):
        d_i = a.source.dim(i)
        for j in range(n):
            d_j = a.source.dim(j)
            t = objs.tensor_index(i, j, tol)
            if t is None:
                skipped += 1
                continue
            lhs = a.component(t) @ mk.kron(a.source.m(i, j), mk.eye(h))
            rhs = mk.kron(mk.eye(h), a.target.m(i, j)) \
                @ mk.kron(a.component(i), mk.eye(d_j)) \
                @ mk.kron(mk.eye(d_i), a.component(j))
            r = tol.residual(lhs, rhs)
            if r > worst_mon:
                worst_mon, wit_mon = r, f"pair=({i},{j})"
    rep.add("monoidality", worst_mon, witness=wit_mon)
    if skipped:
        rep.skip("monoidality_skipped_pairs", witness=f"count={skipped}")
    rep.add("unit_law", tol.residual(
        a.component(0) @ mk.kron(a.source.unitor, mk.eye(h)),
        mk.kron(mk.eye(h), a.target.unitor)))

    worst_uni, wit_uni = 0.0, None
    for i in range(n):
        c = a.component(i)
        r = max(tol.residual(mk.dagger(c) @ c, mk.eye(c.shape[1])),
                tol.residual(c @ mk.dagger(c), mk.eye(c.shape[0])))
        if r > worst_uni:
            worst_uni, wit_uni = r, f"object={i}"
    if a.claim_unitary:
        rep.add("component_unitarity", worst_uni, witness=wit_uni)
    else:
        rep.add_status("component_unitarity",
                       "skipped", witness="not claimed unitary")

    if cross_check:
        if all(objs.dual_index(i, tol) is not None for i in range(n)):
            dist = dual_distance(a, tol)
            unitary_verdict = worst_uni <= tol.eps
            dual_verdict = dist <= tol.eps
            rep.add("unitarity_equivalence_agreement",
                    0.0 if unitary_verdict == dual_verdict else 1.0,
                    witness=f"component_residual={worst_uni:.3e} "
                            f"dagger_vs_dual={dist:.3e}")
        else:
            rep.skip("unitarity_equivalence_agreement",
                     witness="object list not closed under duals")
    return rep


def verify_modification(m: Modification, tol: Tolerance = DEFAULT_TOL) -> Report:
    rep = Report("modification", tol.eps)
    a, b = m.source, m.target
    _same_functor(a.source, b.source)
    _same_functor(a.target, b.target)
    worst, wit = 0.0, None
    worst_dag, wit_dag = 0.0, None
    fdag = mk.dagger(m.mat)
    for i in range(len(a.objects)):
        d1, d2 = a.source.dim(i), a.target.dim(i)
        lhs = mk.kron(m.mat, mk.eye(d2)) @ a.component(i)
        rhs = b.component(i) @ mk.kron(mk.eye(d1), m.mat)
        r = tol.residual(lhs, rhs)
        if r > worst:
            worst, wit = r, f"object={i}"
        lhs = mk.kron(fdag, mk.eye(d2)) @ b.component(i)
        rhs = a.component(i) @ mk.kron(mk.eye(d1), fdag)
        r = tol.residual(lhs, rhs)
        if r > worst_dag:
            worst_dag, wit_dag = r, f"object={i}"
    rep.add("intertwines_components", worst, witness=wit)
    rep.add("dagger_is_modification", worst_dag, witness=wit_dag)
    return rep


def is_unitary_matrix(m: np.ndarray, tol: Tolerance) -> bool:
    return (m.shape[0] == m.shape[1]
            and tol.residual(mk.dagger(m) @ m, mk.eye(m.shape[1])) <= tol.eps
            and tol.residual(m @ mk.dagger(m), mk.eye(m.shape[0])) <= tol.eps)


def mod_vertical(f: Modification, g: Modification) -> Modification:
    if g.source is not f.target and not upt_equal(g.source, f.target):
        raise StructuralError("vertical composition endpoint mismatch")
    return Modification(f.source, g.target, g.mat @ f.mat)


def mod_horizontal(f: Modification, g: Modification) -> Modification:
    """Whiskered tensor of modifications along composition of carriers."""
    return Modification(upt_compose(f.source, g.source),
                        upt_compose(f.target, g.target),
                        mk.kron(f.mat, g.mat))


def modification_space(a: UPT, b: UPT, tol: Tolerance = DEFAULT_TOL):
    """Orthonormal basis of linear maps H_a -> H_b intertwining components."""
    _same_functor(a.source, b.source)
    _same_functor(a.target, b.target)
    constraints = []
    for i in range(len(a.objects)):
        d1, d2 = a.source.dim(i), a.target.dim(i)
        ai, bi = a.component(i), b.component(i)
        constraints.append(
            lambda f, ai=ai, bi=bi, d1=d1, d2=d2:
            mk.kron(f, mk.eye(d2)) @ ai - bi @ mk.kron(mk.eye(d1), f))
    return mk.linear_solution_space(constraints, (b.dim, a.dim), tol)


@dataclass
class ModSearchResult:
    modification: Modification | None
    definitive_negative: bool
    attempts_used: int

    @property
    def found(self) -> bool:
        return self.modification is not None

    @property
    def status(self) -> str:
        if self.found:
            return "pass"
        return "fail" if self.definitive_negative else INCONCLUSIVE


def find_unitary_modification(a: UPT, b: UPT, tol: Tolerance = DEFAULT_TOL,
                              seed: int = DEFAULT_SEED,
                              attempts: int = 8) -> ModSearchResult:
    """Randomised-with-proof search for a unitary modification a -> b."""
    if a.dim != b.dim:
        return ModSearchResult(None, True, 0)

    def certify(mat) -> Modification | None:
        if not is_unitary_matrix(mat, tol):
            return None
        m = Modification(a, b, mat)
        return m if verify_modification(m, tol).passed else None

    got = certify(mk.eye(a.dim))
    if got is not None:
        return ModSearchResult(got, False, 0)
    basis = modification_space(a, b, tol)
    if not basis:
        return ModSearchResult(None, True, 0)
    rng = np.random.default_rng(seed)
    for k in range(1, attempts + 1):
        coeffs = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
        cand = sum(c * t for c, t in zip(coeffs, basis))
        try:
            u = mk.polar_unitary(cand, tol)
        except Exception:
            continue
        got = certify(u)
        if got is not None:
            return ModSearchResult(got, False, k)
    return ModSearchResult(None, False, attempts)


def dual_certificate(a: UPT, tol: Tolerance = DEFAULT_TOL) -> Report:
    """Certify the right dual: snake equations as modifications plus
    carrier-level duality."""
    from .cdagcat import DualityWitness, standard_duality, verify_duality

    rep = Report("upt_dual", tol.eps)
    ad = upt_dual(a, tol)
    rep.extend(verify_upt(ad, tol, cross_check=False), prefix="dual.")
    comp_da = upt_compose(ad, a)     # F2 -> F2
    comp_ad = upt_compose(a, ad)     # F1 -> F1
    h = a.dim
    cup = Modification(identity_upt(a.target), comp_da, _pattern(h))
    cap = Modification(comp_ad, identity_upt(a.source), _pattern(h).T)
    rep.extend(verify_modification(cup, tol), prefix="cup_modification.")
    rep.extend(verify_modification(cap, tol), prefix="cap_modification.")
    # carrier-level snakes (componentwise duality)
    w = standard_duality(fhilb(h))
    rep.extend(verify_duality(w, tol), prefix="carrier.")
    # snake equalities for the modifications themselves
    snake1 = mk.kron(cap.mat, mk.eye(h)) @ mk.kron(mk.eye(h), cup.mat)
    rep.add("modification_snake_right", tol.residual(snake1, mk.eye(h)))
    snake2 = mk.kron(mk.eye(h), cap.mat) @ mk.kron(cup.mat, mk.eye(h))
    rep.add("modification_snake_left", tol.residual(snake2, mk.eye(h)))
    return rep


def frobenius_from_upt(a: UPT, tol: Tolerance = DEFAULT_TOL):
    """Pair-of-pants monoid of a UPT, with its membership certificate."""
    h = a.dim
    if h == 0:
        raise DegenerateDimensionError("carrier dimension must be positive")
    root = float(np.sqrt(h))
    pat = _pattern(h)
    carrier = fhilb(h * h)
    mult_mat = mk.kron(mk.eye(h), mk.kron(pat.T, mk.eye(h))) / root
    unit_mat = pat * root
    aa = tensor_obj(carrier, carrier)
    monoid = FrobeniusMonoid(
        carrier,
        CMor(aa, carrier, mult_mat),
        CMor(unit_object(carrier), carrier, unit_mat),
        claim_special=True,
    )
    comp = upt_compose(a, upt_dual(a, tol))
    rep = Report("pants_certificate", tol.eps)
    rep.extend(verify_upt(comp, tol, cross_check=False), prefix="composite.")
    mult_mod = Modification(upt_compose(comp, comp), comp, mult_mat)
    rep.extend(verify_modification(mult_mod, tol), prefix="mult_modification.")
    unit_mod = Modification(identity_upt(a.source), comp, unit_mat)
    rep.extend(verify_modification(unit_mod, tol), prefix="unit_modification.")
    rep.extend(verify_frobenius(monoid, tol), prefix="frobenius.")
    return monoid, rep


def star_iso_from_equivalence(a1: UPT, a2: UPT, e: UPT, tau: Modification,
                              tol: Tolerance = DEFAULT_TOL):
    """Unitary *-isomorphism between the pants monoids of equivalent UPTs.

    tau must be a unitary modification a1 -> a2 (x) e with e of dimension 1.
    Returns (f, report); f = sqrt(d_X/d_Y) (T (x) conj T) after capping the
    e-legs.
    """
    rep = Report("star_iso_from_equivalence", tol.eps)
    if e.dim != 1:
        raise StructuralError("equivalence carrier must be one-dimensional")
    comp = upt_compose(a2, e)
    if tau.source is not a1 and not upt_equal(tau.source, a1):
        raise StructuralError("tau must start at the first transformation")
    if tau.target is not comp and not upt_equal(tau.target, comp):
        raise StructuralError("tau must end at the composite with the twist")
    rep.extend(verify_modification(tau, tol), prefix="tau.")
    rep.add("tau_unitary", 0.0 if is_unitary_matrix(tau.mat, tol) else 1.0)
    if not is_unitary_matrix(tau.mat, tol):
        raise StructuralError("tau is not unitary")
    d_x, d_y, d_e = float(a1.dim), float(a2.dim), float(e.dim)
    rep.add("dimension_identity", abs(d_x - d_y * d_e) / max(1.0, d_x))
    t = tau.mat
    f_mat = np.sqrt(d_x / d_y) * mk.kron(t, np.conj(t))
    monoid1, cert1 = frobenius_from_upt(a1, tol)
    monoid2, cert2 = frobenius_from_upt(a2, tol)
    rep.extend(cert1, prefix="pants1.")
    rep.extend(cert2, prefix="pants2.")
    f = CMor(monoid1.carrier, monoid2.carrier, f_mat)
    rep.extend(check_star_morphism(f, monoid1, monoid2, tol), prefix="star.")
    return f, rep


def equivalence_from_star_iso(a1: UPT, a2: UPT, f: CMor,
                              tol: Tolerance = DEFAULT_TOL):
    """Recover (e, tau) from a unitary *-isomorphism of pants monoids.

    Splits the canonical dagger idempotent on H2* (x) H1; the image must be
    one-dimensional, giving the twist e and the unitary modification tau.
    Returns (e, tau, report).
    """
    rep = Report("equivalence_from_star_iso", tol.eps)
    monoid1, _ = frobenius_from_upt(a1, tol)
    monoid2, _ = frobenius_from_upt(a2, tol)
    cert = check_star_morphism(f, monoid1, monoid2, tol)
    rep.extend(cert, prefix="star.")
    if not cert.passed:
        raise StructuralError("f is not a unitary *-isomorphism of the pants monoids")
    h1, h2 = a1.dim, a2.dim
    d_x, d_y = float(h1), float(h2)
    pat1, pat2 = _pattern(h1), _pattern(h2)
    stage1 = mk.kron(mk.eye(h2 * h1), pat1)
    stage2 = mk.kron(mk.eye(h2), mk.kron(f.mat, mk.eye(h1)))
    stage3 = mk.kron(pat2.T, mk.eye(h2 * h1))
    ftilde = (stage3 @ stage2 @ stage1) / np.sqrt(d_x * d_y)
    rep.add("idempotent_hermitian", tol.residual(ftilde, mk.dagger(ftilde)))
    rep.add("idempotent_squares", tol.residual(ftilde @ ftilde, ftilde))
    beta = upt_compose(upt_dual(a2, tol), a1)
    fmod = Modification(beta, beta, ftilde)
    rep.extend(verify_modification(fmod, tol), prefix="idempotent_modification.")
    v, rank = mk.split_dagger_idempotent(ftilde, tol)
    rep.add("e_carrier_dim_1", 0.0 if rank == 1 else 1.0,
            witness=f"rank={rank}")
    if rank != 1:
        raise StructuralError(
            f"split idempotent has rank {rank}, expected 1; "
            "object list may be incomplete")
    comps = {}
    for i in range(len(a1.objects)):
        d = a1.source.dim(i)
        comps[i] = mk.kron(mk.dagger(v), mk.eye(d)) @ beta.component(i) \
            @ mk.kron(mk.eye(d), v)
    e = UPT(a2.target, a1.target, 1, comps)
    rep.extend(verify_upt(e, tol, cross_check=False), prefix="e.")
    # recovered dimension scalars: dim_R(E) = d_Y/d_X and dim_L(E) = d_X/d_Y
    rep.add("dimension_ratio", abs(d_x - d_y) / max(1.0, d_x))
    tau_mat = np.sqrt(d_y) * (mk.kron(mk.eye(h2), mk.dagger(v))
                              @ mk.kron(pat2, mk.eye(h1)))
    tau = Modification(a1, upt_compose(a2, e), tau_mat)
    rep.extend(verify_modification(tau, tol), prefix="tau.")
    rep.add("tau_unitary", 0.0 if is_unitary_matrix(tau_mat, tol) else 1.0)
    return e, tau, rep


def pauli_upt(objs: ObjectList, tol: Tolerance = DEFAULT_TOL):
    """Dimension-2 UPT from the canonical to the cocycle-twisted functor on
    the Klein four-group, with Pauli-matrix components."""
    from .repg import klein_pauli_cocycle, twisted_fibre_functor

    psi = klein_pauli_cocycle(objs)
    f1 = canonical_fibre_functor(objs)
    f2 = twisted_fibre_functor(objs, psi, tol)
    group = objs.group
    from .repg import _generators
    gens = _generators(group)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.array([[1, 0], [0, -1]], dtype=complex)
    comps = {}
    for i, repn in enumerate(objs.reps):
        a = 0 if repn.mats[gens[0]][0, 0].real > 0 else 1
        b = 0 if repn.mats[gens[1]][0, 0].real > 0 else 1
        u = np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(z, b)
        comps[i] = u
    return UPT(f1, f2, 2, comps)
