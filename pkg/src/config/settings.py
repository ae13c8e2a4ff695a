from pydantic_settings import BaseSettings
from functools import lru_cache

class Settings(BaseSettings):
    # Logging
    log_level: str = "WARNING"

    # Exact arithmetic
    interval_initial_precision: int = 64
    interval_max_precision: int = 1 << 16

    # Normalization
    shear_candidate_limit: int = 10_000

    # .arr field headers
    field_search_max_order: int = 240

    # Spectrum
    certify_primitive_roots: bool = True

    # Multinet search
    multinet_budget: int = 200_000
    multinet_exhaustive_max_lines: int = 13

    # SVG rendering
    svg_margin: float = 0.1
    svg_width_inches: float = 8.0

    class Config:
        env_file = ".env"
        case_sensitive = False

@lru_cache()
def get_settings() -> Settings:
    return Settings()
