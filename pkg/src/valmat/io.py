"""JSON file formats.

Every writer emits sorted keys so that output is byte-deterministic.
Subset keys are comma-separated 1-based positions, ``""`` for the empty set.
"""
import json
from typing import Any, Dict

from .errors import FormatError
from .matroid import MatroidV, bits
from .modclass import ModuleClass
from .realize import Ring, ValuedMatrix, p_local, PUISEUX
from .valgroup import INF, ext, fmt


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def subset_key(mask: int) -> str:
    return ",".join(str(e + 1) for e in bits(mask))


def parse_subset_key(key: str, n: int) -> int:
    if not isinstance(key, str):
        raise FormatError(f"subset key {key!r} is not a string")
    key = key.strip()
    if not key:
        return 0
    mask = 0
    prev = 0
    for tok in key.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise FormatError(f"bad subset key {key!r}")
        e = int(tok)
        if not 1 <= e <= n:
            raise FormatError(f"element {e} in key {key!r} is outside 1..{n}")
        if e <= prev:
            raise FormatError(f"subset key {key!r} is not strictly increasing")
        prev = e
        mask |= 1 << (e - 1)
    return mask


# -- valmat/1 ----------------------------------------------------------------------------------

def matroid_to_json(M: MatroidV) -> Dict:
    out = {"format": "valmat/1", "n": M.n, "value_group": M.flavor,
           "modules": {subset_key(A): M.modules[A].to_json() for A in range(1 << M.n)}}
    if M.labels != tuple(range(1, M.n + 1)):
        out["labels"] = list(M.labels)
    return out


def _length(token, flavor: str):
    v = ext(token)
    if v is not INF and flavor == "int" and getattr(v, "denominator", 1) != 1:
        raise FormatError(f"length {token!r} is not an integer")
    return v


def matroid_from_json(data: Dict) -> MatroidV:
    if not isinstance(data, dict) or data.get("format") != "valmat/1":
        raise FormatError("expected format valmat/1")
    try:
        n = int(data["n"])
        flavor = data.get("value_group", "int")
        modules = data["modules"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed valmat/1 payload: {exc}") from exc
    if flavor not in ("int", "rat"):
        raise FormatError(f"unknown value group {flavor!r}")
    if n < 0 or not isinstance(modules, dict):
        raise FormatError("malformed valmat/1 payload")
    table = [None] * (1 << n)
    for key, lengths in modules.items():
        A = parse_subset_key(key, n)
        if table[A] is not None:
            raise FormatError(f"subset {key!r} appears twice")
        if not isinstance(lengths, list):
            raise FormatError(f"module at {key!r} is not a list")
        try:
            table[A] = ModuleClass(_length(x, flavor) for x in lengths)
        except ValueError as exc:
            raise FormatError(f"module at {key!r}: {exc}") from exc
    missing = [subset_key(A) for A, m in enumerate(table) if m is None]
    if missing:
        raise FormatError(f"the table is missing {len(missing)} subsets, first {missing[0]!r}")
    labels = data.get("labels")
    return MatroidV(table, labels, flavor)


# -- valmatrix/1 -------------------------------------------------------------------------------

def ring_from_json(data: Dict) -> Ring:
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "p-local":
        p = data.get("p")
        if not isinstance(p, int) or p < 2:
            raise FormatError(f"bad prime {p!r}")
        return p_local(p)
    if kind == "puiseux-poly":
        return PUISEUX
    raise FormatError(f"unknown ring {data!r}")


def matrix_from_json(data: Dict, ring: Ring = None) -> ValuedMatrix:
    """Parse a presentation; ``ring`` overrides the ring named in the file."""
    if not isinstance(data, dict) or data.get("format") != "valmatrix/1":
        raise FormatError("expected format valmatrix/1")
    try:
        ring = ring or ring_from_json(data["ring"])
        rows = int(data["rows"])
        rels = list(data.get("relations", []))
        els = data["elements"]
        keys = sorted(els, key=int)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed valmatrix/1 payload: {exc}") from exc
    if keys != [str(e) for e in range(1, len(keys) + 1)]:
        raise FormatError("elements must be keyed 1..n")
    return ValuedMatrix(ring, rows, rels, [els[k] for k in keys])


def matrix_to_json(X: ValuedMatrix) -> Dict:
    return {"format": "valmatrix/1", "ring": X.ring.to_json(), "rows": X.rows,
            "relations": [[X.ring.dump(x) for x in col] for col in X.relations],
            "elements": {str(k + 1): [X.ring.dump(x) for x in col] for k, col in enumerate(X.elements)}}


# -- multi-prime tables ---------------------------------------------------------------------------

def multi_to_json(locs: Dict[int, MatroidV], relevant) -> Dict:
    return {"format": "valmat-multi/1", "primes": sorted(locs),
            "relevant_primes": list(relevant),
            "locals": {str(p): matroid_to_json(locs[p]) for p in sorted(locs)}}


def multi_from_json(data: Dict):
    from .polyhedral.lifted import MatroidOverZ
    if not isinstance(data, dict) or data.get("format") != "valmat-multi/1":
        raise FormatError("expected format valmat-multi/1")
    try:
        locs = {int(p): matroid_from_json(m) for p, m in data["locals"].items()}
        primes = tuple(int(p) for p in data["primes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed valmat-multi/1 payload: {exc}") from exc
    n = next(iter(locs.values())).n if locs else 0
    return MatroidOverZ(n, primes, locs)


def point_to_json(point) -> Dict:
    return {f"{subset_key(A)}|{i}": fmt(v) for (A, i), v in sorted(point.items())}

