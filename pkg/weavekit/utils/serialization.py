"""Tagged JSON codecs for the exported value types.

``encode`` wraps the value's own JSON form as ``{"type": ..., "data": ...}``
so that ``decode`` can rebuild it without being told what to expect.
Rationals always travel as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Dict, Optional, Tuple

from ..clusterkit.laurent import LaurentPoly
from ..clusterkit.matrix import ExchangeMatrix, Quiver
from ..clusterkit.seeds import Seed, YSeedNumeric
from ..flagkit.flags import BoundaryFlags, Flag
from ..foldkit.action import VertexAction
from ..foldkit.folding import FoldedMatrix
from ..ngraphkit.cycles import CycleTuple
from ..ngraphkit.export import ngraph_from_json, ngraph_to_json
from ..ngraphkit.graph import NGraph
from ..rootdata import CartanMatrix, DynkinType
from .errors import InputError

Codec = Tuple[str, Callable[[Any], Any], Callable[[Any], Any]]


def _laurent_to_json(value: LaurentPoly) -> dict:
    return {"m": value.nvars, "terms": value.to_json()}


def _laurent_from_json(data: dict) -> LaurentPoly:
    return LaurentPoly.from_json(int(data["m"]), data["terms"])


def _quiver_to_json(value: Quiver) -> dict:
    return {"n": value.n, "adjacency": [list(row) for row in value.adjacency]}


def _quiver_from_json(data: dict) -> Quiver:
    return Quiver(tuple(tuple(int(v) for v in row) for row in data["adjacency"]), int(data["n"]))


CODECS: Dict[type, Codec] = {
    DynkinType: ("dynkin_type", DynkinType.to_json, DynkinType.from_json),
    CartanMatrix: ("cartan_matrix", CartanMatrix.to_json, CartanMatrix.of),
    ExchangeMatrix: ("exchange_matrix", ExchangeMatrix.to_json, ExchangeMatrix.from_json),
    Quiver: ("quiver", _quiver_to_json, _quiver_from_json),
    LaurentPoly: ("laurent", _laurent_to_json, _laurent_from_json),
    Seed: ("seed", Seed.to_json, Seed.from_json),
    YSeedNumeric: ("y_seed", YSeedNumeric.to_json, YSeedNumeric.from_json),
    VertexAction: ("vertex_action", VertexAction.to_json, VertexAction.from_json),
    FoldedMatrix: ("folded_matrix", FoldedMatrix.to_json, FoldedMatrix.from_json),
    Flag: ("flag", Flag.to_json, Flag.from_json),
    BoundaryFlags: ("boundary_flags", BoundaryFlags.to_json, BoundaryFlags.from_json),
}
DECODERS: Dict[str, Callable[[Any], Any]] = {name: decoder for name, _, decoder in CODECS.values()}
DECODERS["ngraph"] = ngraph_from_json


def encode(value: Any) -> dict:
    """Tagged JSON form of a supported value; N-graphs go through :func:`encode_ngraph`."""
    if isinstance(value, NGraph):
        return encode_ngraph(value)
    for cls, (name, encoder, _) in CODECS.items():
        if isinstance(value, cls):
            return {"type": name, "data": encoder(value)}
    raise InputError(f"No JSON codec for {type(value).__name__}")


def encode_ngraph(g: NGraph, cycles: Optional[CycleTuple] = None) -> dict:
    return {"type": "ngraph", "data": ngraph_to_json(g, cycles)}


def decode(payload: dict) -> Any:
    """Inverse of :func:`encode`; N-graphs come back as ``(graph, cycles)``."""
    try:
        decoder = DECODERS[payload["type"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"Not a tagged weavekit value: {exc}") from exc
    return decoder(payload["data"])


def dumps(value: Any) -> str:
    """Canonical text: sorted keys, no whitespace."""
    return json.dumps(encode(value), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    return decode(json.loads(text))
