"""Run configuration."""

import os
from dataclasses import dataclass, field

ENV_PRECISION = "UNIVOQUE_PRECISION_BITS"


@dataclass(frozen=True)
class Config:
    precision_bits: int = 256
    tol: float = 1e-12
    # hard ceiling for automatic precision doubling
    max_precision_bits: int = 4096
    stream_depth: int = 512
    depth_caps: dict = field(default_factory=lambda: {
        "count-codings": 24,
        "tm-inequalities": 8,
        "ladder": 8,
        "survivor-iterations": 64,
        "survivor-resolution": 4096,
    })

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    @classmethod
    def from_env(cls, **overrides):
        bits = os.environ.get(ENV_PRECISION)
        if bits is not None and "precision_bits" not in overrides:
            overrides["precision_bits"] = int(bits)
        return cls(**overrides)


DEFAULT = Config()
