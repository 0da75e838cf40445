"""Concrete pivotal dagger categories: FHilb and GHilb.

FHilb objects are finite-dimensional Hilbert spaces; GHilb objects are
G-graded spaces for a finite group G.  A GHilb object records the grade of
every basis vector, so the tensor product is a plain Kronecker product with
concatenated grade bookkeeping and is strictly associative.  Canonical
(freshly declared) objects order their basis by group-element index then
within-block index; composites inherit kron order.

Duals are chosen strictly: the dual object reuses the carrier with inverted
grades, cup and cap match basis indices, so X** == X on the nose and the
pivotal 2-isomorphisms collapse to identities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import matkernel as mk
from .errors import InstanceMismatchError, ShapeMismatchError, StructuralError
from .groups import FiniteGroup
from .matkernel import Tolerance, DEFAULT_TOL
from .report import Report

FHILB = "fhilb"
GHILB = "ghilb"


@dataclass(frozen=True)
class CatObject:
    instance: str
    dim: int = 0
    group: FiniteGroup | None = None
    grades: tuple[int, ...] = ()

    def __post_init__(self):
        if self.instance == FHILB:
            if self.dim < 0 or self.group is not None or self.grades:
                raise StructuralError("bad FHilb object")
        elif self.instance == GHILB:
            if self.group is None:
                raise StructuralError("GHilb object needs a group")
            if len(self.grades) != self.dim:
                raise StructuralError("grade list must cover every basis vector")
            if any(not (0 <= g < self.group.order) for g in self.grades):
                raise StructuralError("grade out of range")
        else:
            raise StructuralError(f"unknown instance {self.instance!r}")

    @property
    def total_dim(self) -> int:
        return self.dim

    def multiplicities(self) -> list[int]:
        """Grade multiplicity vector in Cayley-table order (GHilb only)."""
        if self.instance != GHILB:
            raise InstanceMismatchError("multiplicities are a GHilb notion")
        mult = [0] * self.group.order
        for g in self.grades:
            mult[g] += 1
        return mult

    def is_canonical_order(self) -> bool:
        return self.instance == FHILB or list(self.grades) == sorted(self.grades)


def fhilb(n: int) -> CatObject:
    return CatObject(FHILB, dim=n)


def ghilb(group: FiniteGroup, mult) -> CatObject:
    """Canonical GHilb object from a multiplicity vector."""
    if len(mult) != group.order:
        raise StructuralError("multiplicity vector must be indexed by the group")
    grades = tuple(g for g in range(group.order) for _ in range(mult[g]))
    return CatObject(GHILB, dim=len(grades), group=group, grades=grades)


def ghilb_from_grades(group: FiniteGroup, grades) -> CatObject:
    return CatObject(GHILB, dim=len(grades), group=group, grades=tuple(grades))


def unit_object(like: CatObject) -> CatObject:
    if like.instance == FHILB:
        return fhilb(1)
    return ghilb_from_grades(like.group, (0,))


def _same_instance(x: CatObject, y: CatObject):
    if x.instance != y.instance:
        raise InstanceMismatchError(f"mixed instances {x.instance}/{y.instance}")
    if x.instance == GHILB and x.group is not y.group and x.group != y.group:
        raise InstanceMismatchError("GHilb objects live over different groups")


def tensor_obj(x: CatObject, y: CatObject) -> CatObject:
    _same_instance(x, y)
    if x.instance == FHILB:
        return fhilb(x.dim * y.dim)
    grades = tuple(x.group.mul(g, h) for g in x.grades for h in y.grades)
    return ghilb_from_grades(x.group, grades)


def dual_obj(x: CatObject) -> CatObject:
    if x.instance == FHILB:
        return x
    return ghilb_from_grades(x.group, tuple(x.group.inv(g) for g in x.grades))


@dataclass(frozen=True)
class CMor:
    dom: CatObject
    cod: CatObject
    mat: np.ndarray

    def __post_init__(self):
        _same_instance(self.dom, self.cod)
        m = mk.as_matrix(self.mat)
        if m.shape != (self.cod.total_dim, self.dom.total_dim):
            raise ShapeMismatchError(
                f"matrix shape {m.shape} does not match cod x dom "
                f"({self.cod.total_dim}, {self.dom.total_dim})"
            )
        object.__setattr__(self, "mat", m)


def identity(x: CatObject) -> CMor:
    return CMor(x, x, mk.eye(x.total_dim))


def compose(*fs: CMor) -> CMor:
    """Composition in diagrammatic order: compose(f, g) = g after f."""
    out = fs[0]
    for g in fs[1:]:
        if g.dom != out.cod:
            raise ShapeMismatchError("composition domain/codomain mismatch")
        out = CMor(out.dom, g.cod, g.mat @ out.mat)
    return out


def tensor_mor(f: CMor, g: CMor) -> CMor:
    return CMor(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod),
                mk.kron(f.mat, g.mat))


def tensor_all(*fs: CMor) -> CMor:
    out = fs[0]
    for f in fs[1:]:
        out = tensor_mor(out, f)
    return out


def dagger_mor(f: CMor) -> CMor:
    return CMor(f.cod, f.dom, mk.dagger(f.mat))


def scalar_mor(like: CatObject, value: complex) -> CMor:
    u = unit_object(like)
    return CMor(u, u, np.array([[value]], dtype=complex))


def as_scalar(f: CMor) -> complex:
    if f.mat.shape != (1, 1):
        raise ShapeMismatchError("morphism is not a scalar")
    return complex(f.mat[0, 0])


def swap_mor(x: CatObject, y: CatObject) -> CMor:
    """The symmetry x (x) y -> y (x) x as a permutation matrix."""
    nx, ny = x.total_dim, y.total_dim
    mat = np.zeros((nx * ny, nx * ny), dtype=complex)
    for i in range(nx):
        for j in range(ny):
            mat[j * nx + i, i * ny + j] = 1.0
    return CMor(tensor_obj(x, y), tensor_obj(y, x), mat)


def is_grade_preserving(f: CMor, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Largest coupling between distinct grades, normalised."""
    if f.dom.instance != GHILB:
        return True, 0.0
    bad = 0.0
    gc, gd = f.cod.grades, f.dom.grades
    for p in range(f.cod.total_dim):
        for q in range(f.dom.total_dim):
            if gc[p] != gd[q]:
                bad = max(bad, abs(f.mat[p, q]))
    scale = max(1.0, float(np.linalg.norm(f.mat)))
    return bad / scale <= tol.eps, bad / scale


@dataclass(frozen=True)
class DualityWitness:
    obj: CatObject
    dual: CatObject
    cup: CMor   # unit -> dual (x) obj
    cap: CMor   # obj (x) dual -> unit

    def __post_init__(self):
        u = unit_object(self.obj)
        if self.cup.dom != u or self.cup.cod != tensor_obj(self.dual, self.obj):
            raise StructuralError("cup must map unit -> dual (x) obj")
        if self.cap.dom != tensor_obj(self.obj, self.dual) or self.cap.cod != u:
            raise StructuralError("cap must map obj (x) dual -> unit")


def standard_duality(x: CatObject) -> DualityWitness:
    """Index-matched cup and cap; the strictest dagger-compatible choice."""
    xd = dual_obj(x)
    n = x.total_dim
    cup = np.zeros((n * n, 1), dtype=complex)
    for i in range(n):
        cup[i * n + i, 0] = 1.0
    cap = cup.T.copy()
    u = unit_object(x)
    return DualityWitness(
        x, xd,
        CMor(u, tensor_obj(xd, x), cup),
        CMor(tensor_obj(x, xd), u, cap),
    )


def verify_duality(w: DualityWitness, tol: Tolerance = DEFAULT_TOL) -> Report:
    """Snake equations plus dagger-duality of the chosen cup/cap."""
    rep = Report("duality", tol.eps)
    x, xd = w.obj, w.dual
    snake1 = compose(tensor_mor(identity(x), w.cup), tensor_mor(w.cap, identity(x)))
    rep.add("snake_right", tol.residual(snake1.mat, identity(x).mat))
    snake2 = compose(tensor_mor(w.cup, identity(xd)), tensor_mor(identity(xd), w.cap))
    rep.add("snake_left", tol.residual(snake2.mat, identity(xd).mat))
    # Pivotal left duals (identity iota) must agree with daggered right duals.
    left_cup_piv = compose(w.cup, swap_mor(xd, x))
    rep.add("dagger_cup", tol.residual(left_cup_piv.mat, dagger_mor(w.cap).mat))
    left_cap_piv = compose(swap_mor(xd, x), w.cap)
    rep.add("dagger_cap", tol.residual(left_cap_piv.mat, dagger_mor(w.cup).mat))
    if x.instance == GHILB:
        ok, res = is_grade_preserving(w.cup, tol)
        rep.add("cup_grading", res)
        ok, res = is_grade_preserving(w.cap, tol)
        rep.add("cap_grading", res)
    return rep


def nested_duality(wx: DualityWitness, wy: DualityWitness) -> DualityWitness:
    """Composite witness for x (x) y with dual yd (x) xd."""
    x, y = wx.obj, wy.obj
    xd, yd = wx.dual, wy.dual
    cup = compose(
        wy.cup,
        tensor_mor(tensor_mor(identity(yd), wx.cup), identity(y)),
    )
    cap = compose(
        tensor_mor(identity(x), tensor_mor(wy.cap, identity(xd))),
        wx.cap,
    )
    return DualityWitness(tensor_obj(x, y), tensor_obj(yd, xd), cup, cap)


def left_cup(w: DualityWitness) -> CMor:
    """unit -> obj (x) dual, from the dagger structure."""
    return dagger_mor(w.cap)


def left_cap(w: DualityWitness) -> CMor:
    """dual (x) obj -> unit, from the dagger structure."""
    return dagger_mor(w.cup)


def transpose_mor(f: CMor, wx: DualityWitness, wy: DualityWitness) -> CMor:
    """Right transpose (mate) f*: yd -> xd of f: x -> y."""
    if f.dom != wx.obj or f.cod != wy.obj:
        raise StructuralError("witnesses do not match the morphism endpoints")
    xd, yd = wx.dual, wy.dual
    return compose(
        tensor_mor(wx.cup, identity(yd)),
        tensor_mor(identity(xd), tensor_mor(f, identity(yd))),
        tensor_mor(identity(xd), wy.cap),
    )


def conjugate_mor(f: CMor, wx: DualityWitness, wy: DualityWitness) -> CMor:
    """Conjugate f_*: xd -> yd, the transpose of the dagger."""
    return transpose_mor(dagger_mor(f), wy, wx)


def trace_mor(f: CMor, w: DualityWitness, side: str = "right") -> complex:
    """Right or left trace of an endomorphism, as a scalar."""
    if f.dom != f.cod:
        raise StructuralError("trace needs an endomorphism")
    if f.dom != w.obj:
        raise StructuralError("witness does not match the endomorphism")
    if side == "right":
        loop = compose(left_cup(w), tensor_mor(f, identity(w.dual)), w.cap)
    elif side == "left":
        loop = compose(w.cup, tensor_mor(identity(w.dual), f), left_cap(w))
    else:
        raise ValueError("side must be 'right' or 'left'")
    return as_scalar(loop)


def dim_obj(x: CatObject, side: str = "right") -> complex:
    return trace_mor(identity(x), standard_duality(x), side)


def sliding_residuals(f: CMor, wx: DualityWitness, wy: DualityWitness,
                      tol: Tolerance = DEFAULT_TOL) -> dict[str, float]:
    """The eight cup/cap sliding identities for f: x -> y.

    Four slide the transpose around the plain cups and caps, four slide the
    dagger/conjugate around the daggered ones.
    """
    x, y = wx.obj, wy.obj
    xd, yd = wx.dual, wy.dual
    ft = transpose_mor(f, wx, wy)
    fdag = dagger_mor(f)
    fconj = conjugate_mor(f, wx, wy)
    res = {}
    res["cup_right"] = tol.residual(
        compose(wx.cup, tensor_mor(identity(xd), f)).mat,
        compose(wy.cup, tensor_mor(ft, identity(y))).mat)
    res["cap_right"] = tol.residual(
        compose(tensor_mor(f, identity(yd)), wy.cap).mat,
        compose(tensor_mor(identity(x), ft), wx.cap).mat)
    res["cup_left"] = tol.residual(
        compose(left_cup(wx), tensor_mor(f, identity(xd))).mat,
        compose(left_cup(wy), tensor_mor(identity(y), ft)).mat)
    res["cap_left"] = tol.residual(
        compose(tensor_mor(ft, identity(x)), left_cap(wx)).mat,
        compose(tensor_mor(identity(yd), f), left_cap(wy)).mat)
    res["cup_left_dagger"] = tol.residual(
        compose(left_cup(wy), tensor_mor(fdag, identity(yd))).mat,
        compose(left_cup(wx), tensor_mor(identity(x), fconj)).mat)
    res["cup_right_dagger"] = tol.residual(
        compose(wy.cup, tensor_mor(identity(yd), fdag)).mat,
        compose(wx.cup, tensor_mor(fconj, identity(x))).mat)
    res["cap_left_dagger"] = tol.residual(
        compose(tensor_mor(fconj, identity(y)), left_cap(wy)).mat,
        compose(tensor_mor(identity(xd), fdag), left_cap(wx)).mat)
    res["cap_right_dagger"] = tol.residual(
        compose(tensor_mor(fdag, identity(xd)), wx.cap).mat,
        compose(tensor_mor(identity(y), fconj), wy.cap).mat)
    return res


def object_to_json(x: CatObject) -> dict:
    if x.instance == FHILB:
        return {"instance": FHILB, "dim": x.dim}
    out = {"instance": GHILB, "group": x.group.to_json(),
           "mult": x.multiplicities()}
    if not x.is_canonical_order():
        out["grades"] = list(x.grades)
    return out


def object_from_json(obj) -> CatObject:
    try:
        inst = obj["instance"]
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"malformed object JSON: {exc}") from exc
    if inst == FHILB:
        return fhilb(int(obj["dim"]))
    if inst == GHILB:
        group = FiniteGroup.from_json(obj["group"])
        if "grades" in obj:
            return ghilb_from_grades(group, [int(g) for g in obj["grades"]])
        return ghilb(group, [int(m) for m in obj["mult"]])
    raise StructuralError(f"unknown instance {inst!r}")
