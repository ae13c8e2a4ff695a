from src.geometry.arrangement import (
    MultiplePoint,
    ProjArrangement,
    ProjLine,
    as_real,
    cross,
    normalize_point,
)
from src.geometry.chambers import (
    Chamber,
    chamber_index,
    distance,
    enumerate_chambers,
    separating_set,
    zaslavsky_counts,
)
from src.geometry.exceptions import (
    DegenerateLineError,
    DuplicateLineError,
    GeometryError,
    InvalidArrangementError,
    NormalizationError,
)
from src.geometry.normalize import AffineLine, NormalizedArrangement, Vertex, decone
