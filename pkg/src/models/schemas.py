"""Report models emitted by the command line.

Field order is the JSON key order; every report serializes
deterministically with model_dump_json(indent=2).
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class ChamberItem(BaseModel):
    label: str
    bounded: bool


class ChambersReport(BaseModel):
    """Sign vectors of all chambers of the deconed arrangement."""

    name: str
    infinity_index: int
    lines: List[int]
    chambers: List[ChamberItem]
    count: int
    bounded: int


class BandItem(BaseModel):
    """One band; lower/upper are cA line indices."""

    label: str
    lower: int
    upper: int
    length: int
    infinity_multiplicity: int
    resonant: bool
    wave: Optional[Dict[str, str]] = None


class BandsReport(BaseModel):
    name: str
    infinity_index: int
    k: int
    bands: List[BandItem]
    resonant_count: int
    dimension: int
    relations: List[List[str]]


class DivisorRow(BaseModel):
    """Eigenspace data for the eigenvalues of order k."""

    k: int
    resonant_bands: int
    dimension: int
    total_dimension: int
    certified: bool
    per_root: Optional[Dict[int, int]] = None
    upper_bound: str
    sharp_pair: Optional[List[int]] = None
    multinet: Optional[List[List[int]]] = None
    criteria: List[str] = []


class SpectrumReport(BaseModel):
    """Monodromy spectrum of H^1 of the Milnor fiber."""

    model_config = ConfigDict(extra="forbid")

    input: str
    name: str
    lines: int
    n: int
    infinity_index: int
    chambers: int
    bounded_chambers: int
    bands: int
    divisors: List[DivisorRow]
    b1: int
    pure_tone: bool
    timings: Optional[Dict[str, float]] = None


class OracleReport(BaseModel):
    name: str
    infinity_index: int
    order: int
    weights: List[int]
    h0: int
    h1: int
    h2: int


class LineRow(BaseModel):
    line: int
    resonant_points: int
    multiple_points: int


class BoundsReport(BaseModel):
    """Structural certificates for one eigenvalue order."""

    name: str
    k: int
    infinity_index: int
    dimension: int
    upper_bound: str
    sharp_pair: Optional[List[int]] = None
    sharp_pairs: int
    multinets: List[List[List[int]]]
    multinet_search_exhaustive: bool
    multinet_nodes: int
    criteria: List[str]
    vanishing_lines: List[int]
    table: List[LineRow]
    violations: List[str]


class CatalogueItem(BaseModel):
    name: str
    lines: int
    field_order: int
    default_infinity: int
    profile: Dict[int, int]
    description: str
    provenance: Optional[str] = None


class CatalogueListing(BaseModel):
    entries: List[CatalogueItem]


class ConjectureItem(BaseModel):
    name: str
    simplicial: bool
    a6m1: bool
    nontrivial: bool
    pure_tone: bool
    multinet_orders: List[int]
    three_multinet: bool
    exhaustive: bool
    consistent: bool


class ConjectureReport(BaseModel):
    rows: List[ConjectureItem]
