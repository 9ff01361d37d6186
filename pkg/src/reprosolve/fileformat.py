"""Problem files and JSON serialization of matrices, sets and generators.

A problem file is a UTF-8 JSON object::

    {
      "field": "GF(3)",            # or "Q"
      "problem": "cline",          # cline | penrose | kcomm | oneinv | index | oracle
      "params": {"m": 1, "n": 1},
      "matrices": {"A": [["1", "0"], ["0", "1"]], ...}
    }

Entries are integer strings, ``"a/b"`` strings or bare JSON integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ParseError, ValidationError
from .field import FieldSpec, parse_field
from .generator import AffineGenerator
from .matrix import Matrix
from .oracle import AffineSolutionSet, Constraint, LinearMatrixSystem, LinearTerm

ROSTERS = {
    "cline": ("A", "B", "C"),
    "penrose": ("A", "B", "D", "E"),
    "kcomm": ("A",),
    "oneinv": ("A",),
    "index": ("A",),
    "oracle": (),
}

DEFAULT_PARAMS = {
    "cline": {"m": 1, "n": 1},
    "penrose": {"m": 1, "n": 1},
    "kcomm": {"k": 1},
}


@dataclass(frozen=True, eq=False)
class ProblemFile:
    field: FieldSpec
    problem: str
    params: dict[str, Any]
    matrices: dict[str, Matrix]


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def read_text(source) -> str:
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")
                                    and not source.lstrip().startswith("[")):
        try:
            return Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return source


def parse_matrix(raw, field: FieldSpec, name: str = "matrix") -> Matrix:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) and r for r in raw):
        raise ParseError(f"{name}: expected a non-empty array of non-empty arrays")
    width = len(raw[0])
    rows = []
    for i, r in enumerate(raw):
        if len(r) != width:
            raise ValidationError(f"{name}: row {i} has {len(r)} entries, expected {width}")
        row = []
        for j, entry in enumerate(r):
            try:
                row.append(field.parse(entry))
            except ValueError as exc:
                raise ParseError(f"{name}[{i}][{j}]: {exc}") from None
        rows.append(row)
    return Matrix(rows, field)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[m.field.format(x) for x in r] for r in m.data]


def parse_problem(source, field_override: FieldSpec | None = None) -> ProblemFile:
    """Parse and validate a problem from a path or JSON text."""
    obj = _load_json(read_text(source))
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    problem = obj.get("problem")
    if problem not in ROSTERS:
        raise ValidationError(f"unknown or missing problem {problem!r}; expected one of {sorted(ROSTERS)}")
    if field_override is not None:
        field = field_override
    elif "field" in obj:
        field = parse_field(str(obj["field"]))
    else:
        raise ValidationError("missing field (give \"field\" in the file or --field)")
    raw_mats = obj.get("matrices", {})
    if not isinstance(raw_mats, dict):
        raise ParseError("matrices must be an object")
    missing = [n for n in ROSTERS[problem] if n not in raw_mats]
    if missing:
        raise ValidationError(f"{problem} problem is missing matrix {', '.join(missing)}")
    matrices = {name: parse_matrix(raw, field, name) for name, raw in raw_mats.items()}
    params = dict(DEFAULT_PARAMS.get(problem, {}))
    user_params = obj.get("params", {})
    if not isinstance(user_params, dict):
        raise ParseError("params must be an object")
    params.update(user_params)
    for key in ("m", "n", "k"):
        if key in params and (not isinstance(params[key], int) or isinstance(params[key], bool) or params[key] < 1):
            raise ValidationError(f"parameter {key} must be a positive integer")
    pf = ProblemFile(field, problem, params, matrices)
    build_problem(pf)  # dimension checks
    return pf


def build_problem(pf: ProblemFile):
    """Turn a parsed file into the matching problem object."""
    from .cline import ClineProblem
    from .kcomm import KCommProblem
    from .penrose import PenroseProblem

    mats, prm = pf.matrices, pf.params
    try:
        if pf.problem == "cline":
            return ClineProblem(mats["A"], mats["B"], mats["C"], prm["m"], prm["n"])
        if pf.problem == "penrose":
            return PenroseProblem(mats["A"], mats["B"], mats["D"], mats["E"], prm["m"], prm["n"])
        if pf.problem == "kcomm":
            return KCommProblem(mats["A"], prm["k"])
        if pf.problem == "index":
            if not mats["A"].is_square:
                raise ValidationError("index needs a square matrix A")
            return mats["A"]
        if pf.problem == "oneinv":
            return mats["A"]
        return build_oracle_system(pf)
    except (ValueError, KeyError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc)) from None


def build_oracle_system(pf: ProblemFile) -> LinearMatrixSystem:
    prm = pf.params
    try:
        x_rows, x_cols = int(prm["x_rows"]), int(prm["x_cols"])
        raw = prm["constraints"]
    except (KeyError, TypeError, ValueError):
        raise ValidationError("oracle problems need params x_rows, x_cols and constraints") from None
    constraints = []
    for n, con in enumerate(raw):
        terms = []
        for t in con.get("terms", []):
            sign = t.get("sign", 1)
            sign = {"+": 1, "-": -1, 1: 1, -1: -1}.get(sign)
            if sign is None:
                raise ValidationError(f"constraint {n}: sign must be +, -, 1 or -1")
            terms.append(LinearTerm(_lookup(pf, t.get("left")), _lookup(pf, t.get("right")), sign))
        constraints.append(Constraint(terms, _lookup(pf, con.get("rhs"))))
    return LinearMatrixSystem(x_rows, x_cols, constraints)


def _lookup(pf: ProblemFile, name) -> Matrix:
    if name not in pf.matrices:
        raise ValidationError(f"constraint refers to undefined matrix {name!r}")
    return pf.matrices[name]


def parse_single_matrix(source, field: FieldSpec, name: str = "X0") -> Matrix:
    """A bare array of rows, or an object whose ``matrices`` hold exactly one entry (or ``name``)."""
    obj = _load_json(read_text(source))
    if isinstance(obj, dict):
        mats = obj.get("matrices", {})
        if name in mats:
            return parse_matrix(mats[name], field, name)
        if len(mats) == 1:
            (key, raw), = mats.items()
            return parse_matrix(raw, field, key)
        raise ValidationError(f"expected a matrix named {name}")
    return parse_matrix(obj, field, name)


def parse_matrix_map(source, field: FieldSpec) -> dict[str, Matrix]:
    obj = _load_json(read_text(source))
    mats = obj.get("matrices", obj) if isinstance(obj, dict) else None
    if not isinstance(mats, dict):
        raise ParseError("expected an object of named matrices")
    return {k: parse_matrix(v, field, k) for k, v in mats.items()}


# -- generators and solution sets -------------------------------------------------


def generator_to_json(h: AffineGenerator) -> dict:
    terms = []
    for n, t in enumerate(h.terms):
        lname, rname = h.labels[n] if n < len(h.labels) else (f"P{n + 1}", f"Q{n + 1}")
        terms.append({
            "sign": "+" if t.sign == 1 else "-",
            "left_label": lname,
            "right_label": rname,
            "left": matrix_to_json(t.left),
            "right": matrix_to_json(t.right),
        })
    return {
        "field": str(h.field),
        "formula": h.formula(),
        "y_rows": h.y_rows,
        "y_cols": h.y_cols,
        "constant_label": h.constant_label,
        "constant": matrix_to_json(h.constant),
        "terms": terms,
    }


def generator_from_json(obj: dict, field: FieldSpec | None = None) -> AffineGenerator:
    if "generator" in obj and isinstance(obj["generator"], dict):
        obj = obj["generator"]
    try:
        field = field or parse_field(obj["field"])
        terms, labels = [], []
        for t in obj["terms"]:
            sign = {"+": 1, "-": -1}[t["sign"]]
            terms.append(LinearTerm(parse_matrix(t["left"], field, "left"), parse_matrix(t["right"], field, "right"),
                                    sign))
            labels.append((t.get("left_label", f"P{len(labels) + 1}"), t.get("right_label", f"Q{len(labels) + 1}")))
        constant = parse_matrix(obj["constant"], field, "constant")
        return AffineGenerator(constant, terms, int(obj["y_rows"]), int(obj["y_cols"]), labels,
                               obj.get("constant_label", "C0"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed generator: missing or invalid {exc}") from None


def parse_generator(source, field: FieldSpec | None = None) -> AffineGenerator:
    obj = _load_json(read_text(source))
    if not isinstance(obj, dict):
        raise ParseError("generator must be an object")
    return generator_from_json(obj, field)


def solution_set_to_json(s: AffineSolutionSet) -> dict:
    out = {"consistent": s.consistent, "shape": [s.x_rows, s.x_cols]}
    if s.consistent:
        out["dimension"] = s.dimension
        out["particular"] = matrix_to_json(s.particular)
        out["basis"] = [matrix_to_json(b) for b in s.basis]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)
