import os
from enum import Enum
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

SEED_ENV_VAR = "STABLECAT_SEED"


class OutputFormat(str, Enum):
    """Supported report formats"""
    JSON = "json"
    TEXT = "text"


class Budget(BaseModel):
    """Search and enumeration budgets shared by every bounded procedure"""

    enumeration_limit: int = Field(default=2**16, ge=1, description="Enumerate all linear combinations when their count is at most this")

    random_trials: int = Field(default=256, ge=0, description="Seeded random candidates tried once enumeration is out of reach")

    decomposition_probes: int = Field(default=64, ge=1, description="Random endomorphism probes per module before falling back")

    exhaustive_endomorphism_limit: int = Field(default=2**16, ge=1, description="Largest End(M) searched exhaustively for idempotents")

    well_definedness_lifts: int = Field(default=32, ge=2, description="Independent lift choices compared when checking the shift on morphisms")

    max_instances: int = Field(default=64, ge=1, description="Instances examined per check family")

    octahedron_solutions: int = Field(default=4096, ge=1, description="Candidate (g', h') pairs examined when completing an octahedron")

    def accounting(self) -> dict[str, int]:
        return self.model_dump()


class RunConfig(BaseModel):
    """Configuration of one CLI invocation"""

    seed: int = Field(default=0, ge=0, lt=2**64, description="Seed for every randomized choice")

    budget: Budget = Field(default_factory=Budget, description="Search budgets")

    out: Optional[str] = Field(default=None, description="Write the JSON report here instead of stdout")

    output_format: OutputFormat = Field(default=OutputFormat.JSON, description="Report format")

    verbose: bool = Field(default=False, description="Log at DEBUG level")


def env_seed() -> Optional[int]:
    """Lowest-priority seed default, read from the environment (and a .env file)."""
    load_dotenv()
    raw = os.getenv(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    return int(raw)
