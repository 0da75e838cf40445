"""JSON encoding of every artifact kind the CLI exchanges.

Floats are printed with 17 significant digits so reports and artifacts are
byte-stable across runs; matrices use the row-major
{"rows", "cols", "entries": [[re, im], ...]} encoding throughout.
"""

from __future__ import annotations

import json

import numpy as np

from . import matkernel as mk
from .cdagcat import CMor, CatObject, object_from_json, object_to_json, tensor_obj, unit_object
from .errors import StructuralError
from .frobenius import FrobeniusMonoid
from .bimodule import DaggerBimodule
from .groups import FiniteGroup
from .repg import FibreFunctor, ObjectList, UnitaryRep
from .upt import UPT, Modification


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        items = ((json.dumps(str(k)), _fmt(v)) for k, v in value.items())
        return "{" + ",".join(f"{k}:{v}" for k, v in items) + "}"
    raise TypeError(f"cannot serialise {type(value)!r}")


def dumps(obj, indent: int | None = None) -> str:
    """Deterministic JSON with fixed float formatting."""
    text = _fmt(obj)
    if indent is not None:
        # reparse/pretty-print keeps the float spellings since they are strings now
        return json.dumps(json.loads(text), indent=indent)
    return text


def rep_to_json(rep: UnitaryRep) -> dict:
    return {"group": rep.group.to_json(),
            "mats": [mk.matrix_to_json(m) for m in rep.mats]}


def rep_from_json(obj) -> UnitaryRep:
    group = FiniteGroup.from_json(obj["group"])
    mats = tuple(mk.matrix_from_json(m) for m in obj["mats"])
    return UnitaryRep(group, mats)


def objlist_to_json(objs: ObjectList) -> list:
    return [rep_to_json(r) for r in objs.reps]


def objlist_from_json(obj) -> ObjectList:
    reps = tuple(rep_from_json(r) for r in obj)
    if not reps:
        raise StructuralError("object list must be nonempty")
    return ObjectList(reps[0].group, reps)


def functor_to_json(f: FibreFunctor) -> dict:
    return {
        "objects": objlist_to_json(f.objects),
        "mult": {f"{i},{j}": mk.matrix_to_json(m)
                 for (i, j), m in sorted(f.mult.items())},
        "unitor": mk.matrix_to_json(f.unitor),
    }


def functor_from_json(obj) -> FibreFunctor:
    objs = objlist_from_json(obj["objects"])
    mult = {}
    for key, m in obj["mult"].items():
        i, j = (int(p) for p in key.split(","))
        mult[(i, j)] = mk.matrix_from_json(m)
    return FibreFunctor(objs, mult, mk.matrix_from_json(obj["unitor"]))


def monoid_to_json(a: FrobeniusMonoid) -> dict:
    return {
        "carrier": object_to_json(a.carrier),
        "mult": mk.matrix_to_json(a.mult.mat),
        "unit": mk.matrix_to_json(a.unit.mat),
        "claim_special": a.claim_special,
    }


def monoid_from_json(obj) -> FrobeniusMonoid:
    carrier = object_from_json(obj["carrier"])
    mult = CMor(tensor_obj(carrier, carrier), carrier,
                mk.matrix_from_json(obj["mult"]))
    unit = CMor(unit_object(carrier), carrier, mk.matrix_from_json(obj["unit"]))
    return FrobeniusMonoid(carrier, mult, unit,
                           claim_special=bool(obj.get("claim_special", True)))


def bimodule_to_json(m: DaggerBimodule) -> dict:
    return {
        "left": monoid_to_json(m.left),
        "right": monoid_to_json(m.right),
        "carrier": object_to_json(m.carrier),
        "action": mk.matrix_to_json(m.action.mat),
    }


def bimodule_from_json(obj) -> DaggerBimodule:
    left = monoid_from_json(obj["left"])
    right = monoid_from_json(obj["right"])
    carrier = object_from_json(obj["carrier"])
    dom = tensor_obj(tensor_obj(left.carrier, carrier), right.carrier)
    action = CMor(dom, carrier, mk.matrix_from_json(obj["action"]))
    return DaggerBimodule(left, right, carrier, action)


def upt_to_json(a: UPT) -> dict:
    return {
        "source": functor_to_json(a.source),
        "target": functor_to_json(a.target),
        "dim": a.dim,
        "components": {str(i): mk.matrix_to_json(a.component(i))
                       for i in sorted(a.components)},
        "claim_unitary": a.claim_unitary,
    }


def upt_from_json(obj) -> UPT:
    source = functor_from_json(obj["source"])
    target = functor_from_json(obj["target"])
    comps = {int(k): mk.matrix_from_json(m)
             for k, m in obj["components"].items()}
    return UPT(source, target, int(obj["dim"]), comps,
               claim_unitary=bool(obj.get("claim_unitary", True)))


def modification_to_json(m: Modification) -> dict:
    return {
        "source": upt_to_json(m.source),
        "target": upt_to_json(m.target),
        "mat": mk.matrix_to_json(m.mat),
    }


def modification_from_json(obj) -> Modification:
    return Modification(upt_from_json(obj["source"]),
                        upt_from_json(obj["target"]),
                        mk.matrix_from_json(obj["mat"]))


_LOADERS = {
    "group": FiniteGroup.from_json,
    "rep": rep_from_json,
    "functor": functor_from_json,
    "frobenius": monoid_from_json,
    "bimodule": bimodule_from_json,
    "upt": upt_from_json,
    "modification": modification_from_json,
}


def load_artifact(kind: str, obj):
    if kind not in _LOADERS:
        raise StructuralError(f"unknown artifact kind {kind!r}")
    return _LOADERS[kind](obj)
