"""
Run configuration.

Defaults come from the environment where one exists (``NORMALCUT_JOBS``);
command-line flags override them.
"""

import os
from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from normalcut.enumeration.fundamental import DEFAULT_BOX_VOLUME_CAP

JOBS_ENV = "NORMALCUT_JOBS"


class Command(str, Enum):
    VALIDATE = "validate"
    ANALYZE = "analyze"
    ENUMERATE = "enumerate"
    UNKNOT = "unknot"
    CERTIFY_KNOTTED = "certify-knotted"
    VERIFY = "verify"


def _jobs_from_env() -> Union[str, int]:
    return os.environ.get(JOBS_ENV, 1)


class RunConfig(BaseModel):
    """Validated settings for one CLI invocation."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    inputs: List[Path] = Field(min_length=1)
    n_max: int = Field(default=5, ge=3)
    box_volume_cap: int = Field(default=DEFAULT_BOX_VOLUME_CAP, gt=0)
    jobs: int = Field(default_factory=_jobs_from_env, ge=1, validate_default=True)
    output: Optional[Path] = None
    mode: Literal["fundamental", "vertex"] = "fundamental"
    admissible_only: bool = False
    spheres: bool = False
    json_output: bool = False
    verbose: bool = False

    @field_validator("inputs")
    @classmethod
    def inputs_exist(cls, paths: List[Path]) -> List[Path]:
        missing = [str(p) for p in paths if not p.is_file()]
        if missing:
            raise ValueError(f"input file(s) not found: {', '.join(missing)}")
        return paths
