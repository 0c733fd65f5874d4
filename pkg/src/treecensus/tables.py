"""Census tables: exact counts keyed by root, or by (root, highest child)."""

from dataclasses import dataclass

GRAIN_ROOT = "root"
GRAIN_ROOT_CHILD = "root+highest-child"

METHOD_FORMULA = "formula"
METHOD_MTT = "mtt"
METHOD_ORACLE = "oracle"


def key_to_str(key) -> str:
    """Serialize a census key: an int, or an (root, child) pair as "r,c"."""
    if isinstance(key, tuple):
        return ",".join(str(part) for part in key)
    return str(key)


@dataclass(frozen=True)
class CensusTable:
    """Exact census of uprooted spanning trees for one graph.

    entries maps a key (a root label, a highest-child label, or a
    (root, highest-child) pair) to an exact nonnegative count.  The method
    tag records how the counts were produced: a closed formula, a
    reduced-Laplacian determinant ("mtt"), or brute-force enumeration.
    """

    family: str
    params: dict
    grain: str
    method: str
    entries: dict

    def __post_init__(self):
        if any(count < 0 for count in self.entries.values()):
            raise ValueError("census counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        """JSON form with counts as decimal strings (bit-exact round trips)."""
        return {
            "family": self.family,
            "params": dict(self.params),
            "grain": self.grain,
            "method": self.method,
            "entries": {key_to_str(k): str(v) for k, v in self.entries.items()},
            "total": str(self.total),
        }
