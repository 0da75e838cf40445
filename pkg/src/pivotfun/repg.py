"""Finite groups acting on Hilbert spaces: representations, intertwiners,
and fibre functors on a fixed finite object list.

A fibre functor is stored concretely: it is the identity on underlying
matrices, with unitary multiplicators m[i,j]: F(X_i) (x) F(X_j) ->
F(X_i (x) X_j) and a unitor.  The canonical functor has identity
multiplicators; cocycle twists put phases on lists of characters.
All "for every object/1-morphism" quantifiers are truncated to the object
list; reports record skipped triples so claims are scoped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import matkernel as mk
from .errors import StructuralError
from .groups import FiniteGroup, verify_group
from .matkernel import DEFAULT_TOL, Tolerance
from .report import Report


@dataclass(frozen=True)
class UnitaryRep:
    group: FiniteGroup
    mats: tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.mats) != self.group.order:
            raise StructuralError("need one matrix per group element")
        mats = tuple(mk.as_matrix(m) for m in self.mats)
        d = mats[0].shape[0]
        if any(m.shape != (d, d) for m in mats):
            raise StructuralError("representation matrices must share one square shape")
        object.__setattr__(self, "mats", mats)

    @property
    def dim(self) -> int:
        return self.mats[0].shape[0]

    def character(self) -> np.ndarray:
        return np.array([np.trace(m) for m in self.mats])


def verify_rep(rep: UnitaryRep, tol: Tolerance = DEFAULT_TOL) -> Report:
    out = Report("representation", tol.eps)
    g = rep.group
    worst_h, wit_h = 0.0, None
    for a in range(g.order):
        for b in range(g.order):
            r = tol.residual(rep.mats[a] @ rep.mats[b], rep.mats[g.mul(a, b)])
            if r > worst_h:
                worst_h, wit_h = r, f"(g,h)=({a},{b})"
    out.add("homomorphism", worst_h, witness=wit_h)
    worst_u, wit_u = 0.0, None
    eye = mk.eye(rep.dim)
    for a in range(g.order):
        r = tol.residual(mk.dagger(rep.mats[a]) @ rep.mats[a], eye)
        if r > worst_u:
            worst_u, wit_u = r, f"g={a}"
    out.add("unitarity", worst_u, witness=wit_u)
    out.add("identity_element", tol.residual(rep.mats[0], eye))
    return out


def trivial_rep(group: FiniteGroup) -> UnitaryRep:
    one = np.ones((1, 1), dtype=complex)
    return UnitaryRep(group, tuple(one for _ in range(group.order)))


def regular_rep(group: FiniteGroup) -> UnitaryRep:
    n = group.order
    mats = []
    for g in range(n):
        m = np.zeros((n, n), dtype=complex)
        for h in range(n):
            m[group.mul(g, h), h] = 1.0
        mats.append(m)
    return UnitaryRep(group, tuple(mats))


def tensor_rep(x: UnitaryRep, y: UnitaryRep) -> UnitaryRep:
    if x.group != y.group:
        raise StructuralError("representations live over different groups")
    return UnitaryRep(x.group, tuple(mk.kron(a, b) for a, b in zip(x.mats, y.mats)))


def conjugate_rep(x: UnitaryRep) -> UnitaryRep:
    return UnitaryRep(x.group, tuple(np.conj(m) for m in x.mats))


def _generators(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    reached = {0}
    for g in range(1, group.order):
        if g in reached:
            continue
        gens.append(g)
        frontier = set(reached)
        for _ in range(group.order):
            new = {group.mul(a, b) for a in frontier for b in frontier | {g}}
            if new <= frontier:
                break
            frontier |= new
        reached = frontier
    return gens


def characters(group: FiniteGroup) -> list[UnitaryRep]:
    """All 1-dimensional characters of an abelian group, trivial first.

    Brute force over homomorphisms sending each generator to a root of unity
    of its order; deterministic enumeration order.
    """
    if not group.is_abelian():
        raise StructuralError("character enumeration needs an abelian group")
    n = group.order
    gens = _generators(group)
    orders = [group.element_order(g) for g in gens]
    # express every element as a product of generator powers
    words: dict[int, tuple[int, ...]] = {}
    for powers in itertools.product(*(range(o) for o in orders)):
        elem = 0
        for g, p in zip(gens, powers):
            for _ in range(p):
                elem = group.mul(elem, g)
        words.setdefault(elem, powers)
    if len(words) != n:
        raise StructuralError("generator search failed to cover the group")
    chars: list[UnitaryRep] = []
    seen = set()
    for ks in itertools.product(*(range(o) for o in orders)):
        vals = []
        for e in range(n):
            phase = sum(k * p / o for k, p, o in zip(ks, words[e], orders))
            vals.append(np.exp(2j * np.pi * phase))
        if any(abs(vals[group.mul(a, b)] - vals[a] * vals[b]) > 1e-9
               for a in range(n) for b in range(n)):
            continue
        key = tuple(np.round(np.angle(v) / (2 * np.pi) % 1.0, 9) for v in vals)
        if key in seen:
            continue
        seen.add(key)
        chars.append(UnitaryRep(
            group, tuple(np.array([[v]], dtype=complex) for v in vals)))
    chars.sort(key=lambda c: tuple(
        (round(float(np.angle(m[0, 0])) / (2 * np.pi) % 1.0, 9)) for m in c.mats))
    return chars


def sign_rep(group: FiniteGroup) -> UnitaryRep:
    """The unique nontrivial character of Z2."""
    if group.order != 2:
        raise StructuralError("sign representation is a Z2 notion")
    return characters(group)[1]


def intertwiner_basis(x: UnitaryRep, y: UnitaryRep,
                      tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal basis of {T : rho_Y(g) T = T rho_X(g) for all g}."""
    if x.group != y.group:
        raise StructuralError("representations live over different groups")
    constraints = [
        (lambda t, a=a: y.mats[a] @ t - t @ x.mats[a])
        for a in range(x.group.order)
    ]
    return mk.linear_solution_space(constraints, (y.dim, x.dim), tol)


@dataclass(frozen=True)
class ObjectList:
    """Finite carrier for the object quantifiers, trivial rep at index 0."""

    group: FiniteGroup
    reps: tuple[UnitaryRep, ...]
    _tensor: dict = field(default_factory=dict, compare=False, repr=False)
    _dual: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.reps:
            raise StructuralError("object list must be nonempty")
        if any(r.group != self.group for r in self.reps):
            raise StructuralError("all representations must share the group")
        t = self.reps[0]
        if t.dim != 1 or any(abs(m[0, 0] - 1.0) > 1e-12 for m in t.mats):
            raise StructuralError("index 0 must be the trivial representation")

    def __len__(self) -> int:
        return len(self.reps)

    def dims(self) -> list[int]:
        return [r.dim for r in self.reps]

    def _match(self, target: UnitaryRep, tol: Tolerance) -> int | None:
        for k, r in enumerate(self.reps):
            if r.dim != target.dim:
                continue
            if all(tol.residual(a, b) <= tol.eps
                   for a, b in zip(r.mats, target.mats)):
                return k
        return None

    def tensor_index(self, i: int, j: int,
                     tol: Tolerance = DEFAULT_TOL) -> int | None:
        """Index of X_i (x) X_j if the literal tensor is listed."""
        key = (i, j)
        if key not in self._tensor:
            self._tensor[key] = self._match(
                tensor_rep(self.reps[i], self.reps[j]), tol)
        return self._tensor[key]

    def dual_index(self, i: int, tol: Tolerance = DEFAULT_TOL) -> int | None:
        """Index of the conjugate (dual) representation of X_i, if listed."""
        if i not in self._dual:
            self._dual[i] = self._match(conjugate_rep(self.reps[i]), tol)
        return self._dual[i]

    def intertwiners(self, i: int, j: int,
                     tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
        return intertwiner_basis(self.reps[i], self.reps[j], tol)

    def separates_elements(self) -> bool:
        """Diagnostic: some listed rep distinguishes every g != e.

        Necessary for the list to tensor-generate Rep(G); completeness is
        the caller's responsibility.
        """
        for g in range(1, self.group.order):
            if all(np.allclose(r.mats[g], np.eye(r.dim)) for r in self.reps):
                return False
        return True


def character_list(group: FiniteGroup) -> ObjectList:
    return ObjectList(group, tuple(characters(group)))


def z2_objects() -> ObjectList:
    from .groups import cyclic
    g = cyclic(2)
    return ObjectList(g, tuple(characters(g)))


@dataclass(frozen=True)
class FibreFunctor:
    objects: ObjectList
    mult: dict          # (i, j) -> unitary ndarray of size d_i d_j
    unitor: np.ndarray  # 1x1 unitary

    def __post_init__(self):
        object.__setattr__(self, "unitor", mk.as_matrix(self.unitor))
        if self.unitor.shape != (1, 1):
            raise StructuralError("unitor must be 1x1")
        dims = self.objects.dims()
        fixed = {}
        for (i, j), m in self.mult.items():
            m = mk.as_matrix(m)
            d = dims[i] * dims[j]
            if m.shape != (d, d):
                raise StructuralError(f"multiplicator ({i},{j}) has wrong shape")
            fixed[(i, j)] = m
        need = {(i, j) for i in range(len(dims)) for j in range(len(dims))}
        if set(fixed) != need:
            raise StructuralError("need a multiplicator for every ordered pair")
        object.__setattr__(self, "mult", fixed)

    def dim(self, i: int) -> int:
        return self.objects.reps[i].dim

    def m(self, i: int, j: int) -> np.ndarray:
        return self.mult[(i, j)]

    def m_inv(self, i: int, j: int) -> np.ndarray:
        return np.linalg.inv(self.mult[(i, j)])

    def structurally_equal(self, other: "FibreFunctor") -> bool:
        if len(self.objects) != len(other.objects):
            return False
        if not np.array_equal(self.unitor, other.unitor):
            return False
        for i, (r, s) in enumerate(zip(self.objects.reps, other.objects.reps)):
            if r.dim != s.dim or any(
                    not np.array_equal(a, b) for a, b in zip(r.mats, s.mats)):
                return False
        return all(np.array_equal(self.mult[k], other.mult[k]) for k in self.mult)


def canonical_fibre_functor(objs: ObjectList) -> FibreFunctor:
    dims = objs.dims()
    mult = {(i, j): mk.eye(dims[i] * dims[j])
            for i in range(len(objs)) for j in range(len(objs))}
    return FibreFunctor(objs, mult, np.ones((1, 1), dtype=complex))


@dataclass(frozen=True)
class Cocycle:
    """2-cocycle on the dual of an abelian group, indexed by a character list."""

    objects: ObjectList
    table: np.ndarray   # table[i, j] = psi(chi_i, chi_j)

    def __post_init__(self):
        t = mk.as_matrix(self.table)
        n = len(self.objects)
        if t.shape != (n, n):
            raise StructuralError("cocycle table must be square over the list")
        if any(self.objects.reps[i].dim != 1 for i in range(n)):
            raise StructuralError("cocycle lives on a list of characters")
        object.__setattr__(self, "table", t)


def verify_cocycle(psi: Cocycle, tol: Tolerance = DEFAULT_TOL) -> Report:
    rep = Report("cocycle", tol.eps)
    objs, t = psi.objects, psi.table
    n = len(objs)
    prod = [[objs.tensor_index(i, j, tol) for j in range(n)] for i in range(n)]
    if any(p is None for row in prod for p in row):
        raise StructuralError("character list must be closed under tensor")
    worst_mod = max(abs(abs(t[i, j]) - 1.0) for i in range(n) for j in range(n))
    rep.add("unit_modulus", worst_mod)
    rep.add("normalized", max(
        max(abs(t[0, j] - 1.0) for j in range(n)),
        max(abs(t[i, 0] - 1.0) for i in range(n))))
    worst, wit = 0.0, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = t[i, j] * t[prod[i][j], k]
                rhs = t[j, k] * t[i, prod[j][k]]
                r = abs(lhs - rhs)
                if r > worst:
                    worst, wit = r, f"triple=({i},{j},{k})"
    rep.add("cocycle_identity", worst, witness=wit)
    return rep


def twisted_fibre_functor(objs: ObjectList, psi: Cocycle,
                          tol: Tolerance = DEFAULT_TOL) -> FibreFunctor:
    """Fibre functor with scalar multiplicators psi(chi_i, chi_j)."""
    if psi.objects is not objs and len(psi.objects) != len(objs):
        raise StructuralError("cocycle is indexed by a different list")
    verify_cocycle(psi, tol).require()
    mult = {(i, j): np.array([[psi.table[i, j]]], dtype=complex)
            for i in range(len(objs)) for j in range(len(objs))}
    return FibreFunctor(objs, mult, np.ones((1, 1), dtype=complex))


def klein_pauli_cocycle(objs: ObjectList) -> Cocycle:
    """The standard nontrivial 2-cocycle on the dual of Z2 x Z2.

    Characters are labelled by exponent pairs (a, b) read off at the two
    generators; psi((a,b),(c,d)) = (-1)^(b c).
    """
    group = objs.group
    if group.order != 4 or any(group.element_order(g) > 2 for g in range(4)):
        raise StructuralError("this cocycle generator needs the Klein group")
    gens = _generators(group)
    if len(gens) != 2:
        raise StructuralError("expected two generators for Z2 x Z2")

    def label(rep: UnitaryRep) -> tuple[int, int]:
        a = 0 if rep.mats[gens[0]][0, 0].real > 0 else 1
        b = 0 if rep.mats[gens[1]][0, 0].real > 0 else 1
        return a, b

    labels = [label(r) for r in objs.reps]
    n = len(objs)
    table = np.ones((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            table[i, j] = (-1.0) ** (labels[i][1] * labels[j][0])
    return Cocycle(objs, table)


def _rep_cup(d: int) -> np.ndarray:
    cup = np.zeros((d * d, 1), dtype=complex)
    for i in range(d):
        cup[i * d + i, 0] = 1.0
    return cup


def induced_duality_mats(f: FibreFunctor, i: int,
                         tol: Tolerance = DEFAULT_TOL):
    """Induced cup/cap pair for F(X_i), plus the left-hand versions.

    Returns (cup, cap, lcup, lcap) or None when the dual object or the
    needed multiplicators are unavailable.
    """
    di = f.objects.dual_index(i, tol)
    if di is None:
        return None
    d = f.dim(i)
    pat = _rep_cup(d)
    u = f.unitor
    u_inv = np.linalg.inv(u)
    cup = f.m_inv(di, i) @ pat @ u          # 1 -> F(Xd) (x) F(X)
    cap = u_inv @ pat.T @ f.m(i, di)        # F(X) (x) F(Xd) -> 1
    lcup = f.m_inv(i, di) @ pat @ u         # 1 -> F(X) (x) F(Xd)
    lcap = u_inv @ pat.T @ f.m(di, i)       # F(Xd) (x) F(X) -> 1
    return cup, cap, lcup, lcap


def verify_fibre_functor(f: FibreFunctor, tol: Tolerance = DEFAULT_TOL) -> Report:
    rep = Report("fibre_functor", tol.eps)
    objs = f.objects
    n = len(objs)
    dims = objs.dims()

    worst_u = max(
        tol.residual(mk.dagger(f.m(i, j)) @ f.m(i, j), mk.eye(dims[i] * dims[j]))
        for i in range(n) for j in range(n))
    rep.add("multiplicators_unitary", worst_u)
    rep.add("unitor_unitary", abs(abs(f.unitor[0, 0]) - 1.0))

    # naturality against every intertwiner pair
    worst_nat, wit_nat = 0.0, None
    spaces = {(i, k): objs.intertwiners(i, k, tol)
              for i in range(n) for k in range(n)}
    for (x, x1), fs in spaces.items():
        if not fs:
            continue
        for (y, y1), gs in spaces.items():
            if not gs:
                continue
            for a, fm in enumerate(fs):
                for b, gm in enumerate(gs):
                    fg = mk.kron(fm, gm)
                    r = tol.residual(f.m(x1, y1) @ fg, fg @ f.m(x, y))
                    if r > worst_nat:
                        worst_nat = r
                        wit_nat = f"pairs=({x}->{x1},{y}->{y1}) basis=({a},{b})"
    rep.add("naturality", worst_nat, witness=wit_nat)

    # associativity and pushpast over triples with listed tensors
    worst_ass, wit_ass = 0.0, None
    worst_pp, wit_pp = 0.0, None
    skipped = 0
    for i in range(n):
        for j in range(n):
            tij = objs.tensor_index(i, j, tol)
            for k in range(n):
                tjk = objs.tensor_index(j, k, tol)
                if tij is None or tjk is None:
                    skipped += 1
                    continue
                lhs = f.m(tij, k) @ mk.kron(f.m(i, j), mk.eye(dims[k]))
                rhs = f.m(i, tjk) @ mk.kron(mk.eye(dims[i]), f.m(j, k))
                r = tol.residual(lhs, rhs)
                if r > worst_ass:
                    worst_ass, wit_ass = r, f"triple=({i},{j},{k})"
                pp1 = tol.residual(
                    np.linalg.solve(f.m(i, tjk), lhs),
                    mk.kron(mk.eye(dims[i]), f.m(j, k)))
                pp2 = tol.residual(
                    np.linalg.solve(f.m(tij, k), rhs),
                    mk.kron(f.m(i, j), mk.eye(dims[k])))
                r = max(pp1, pp2)
                if r > worst_pp:
                    worst_pp, wit_pp = r, f"triple=({i},{j},{k})"
    rep.add("associativity", worst_ass, witness=wit_ass)
    rep.add("pushpast", worst_pp, witness=wit_pp)
    if skipped:
        rep.skip("associativity_skipped_triples", witness=f"count={skipped}")

    worst_unl = max(
        max(tol.residual(f.m(0, i) @ mk.kron(f.unitor, mk.eye(dims[i])),
                         mk.eye(dims[i])),
            tol.residual(f.m(i, 0) @ mk.kron(mk.eye(dims[i]), f.unitor),
                         mk.eye(dims[i])))
        for i in range(n))
    rep.add("unitality", worst_unl)

    # inverse-side axioms, implied but tested
    worst_co = 0.0
    for (x, x1), fs in spaces.items():
        for (y, y1), gs in spaces.items():
            for fm in fs:
                for gm in gs:
                    fg = mk.kron(fm, gm)
                    worst_co = max(worst_co, tol.residual(
                        fg @ f.m_inv(x, y), f.m_inv(x1, y1) @ fg))
    rep.add("conaturality", worst_co)
    worst_counl = max(
        max(tol.residual(mk.kron(np.linalg.inv(f.unitor), mk.eye(dims[i]))
                         @ f.m_inv(0, i), mk.eye(dims[i])),
            tol.residual(mk.kron(mk.eye(dims[i]), np.linalg.inv(f.unitor))
                         @ f.m_inv(i, 0), mk.eye(dims[i])))
        for i in range(n))
    rep.add("counitality", worst_counl)
    worst_mdag = max(
        tol.residual(f.m_inv(i, j), mk.dagger(f.m(i, j)))
        for i in range(n) for j in range(n))
    rep.add("mult_inverse_is_dagger", worst_mdag)

    # induced duals: snakes and pivotality
    worst_snake, worst_piv = 0.0, 0.0
    wit_snake, wit_piv = None, None
    dual_skipped = 0
    for i in range(n):
        mats = induced_duality_mats(f, i, tol)
        if mats is None:
            dual_skipped += 1
            continue
        cup, cap, lcup, lcap = mats
        d = dims[i]
        eye = mk.eye(d)
        s1 = tol.residual(mk.kron(cap, eye) @ mk.kron(eye, cup), eye)
        s2 = tol.residual(mk.kron(eye, cap) @ mk.kron(cup, eye), eye)
        s3 = tol.residual(mk.kron(eye, lcap) @ mk.kron(lcup, eye), eye)
        s4 = tol.residual(mk.kron(lcap, eye) @ mk.kron(eye, lcup), eye)
        r = max(s1, s2, s3, s4)
        if r > worst_snake:
            worst_snake, wit_snake = r, f"object={i}"
        std = _rep_cup(d)
        f_r = mk.kron(eye, cap) @ mk.kron(std, eye)
        f_l = mk.kron(lcap, eye) @ mk.kron(eye, std)
        r = tol.residual(f_l, f_r)
        if r > worst_piv:
            worst_piv, wit_piv = r, f"object={i}"
    rep.add("induced_duals_snakes", worst_snake, witness=wit_snake)
    rep.add("pivotality", worst_piv, witness=wit_piv)
    if dual_skipped:
        rep.skip("induced_duals_skipped", witness=f"count={dual_skipped}")
    return rep
