"""Run configuration: seed, genericity prime, retry budget, verification flag.

Flags override the MIXMULT_SEED / MIXMULT_PRIME / MIXMULT_MAX_RETRIES
environment variables, which override the defaults. The seed feeds Python's
Mersenne-Twister generator (``random.Random``) and fully determines every
random choice in a run.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .fields import DEFAULT_PRIME, is_prime

_U64 = 1 << 64


@dataclass
class RunConfig:
    seed: int = 0
    prime: int = DEFAULT_PRIME
    max_retries: int = 16
    verify: bool = False

    def __post_init__(self):
        if not 0 <= self.seed < _U64:
            raise InputError("seed must fit in 64 unsigned bits")
        if not is_prime(self.prime):
            raise InputError(f"configured prime {self.prime} is not prime")
        if self.max_retries < 1:
            raise InputError("max_retries must be positive")


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


def load_config(
    seed: Optional[int] = None,
    prime: Optional[int] = None,
    max_retries: Optional[int] = None,
    verify: bool = False,
) -> RunConfig:
    """Merge explicit values over environment overrides over defaults."""
    if seed is None:
        seed = _env_int("MIXMULT_SEED")
    if prime is None:
        prime = _env_int("MIXMULT_PRIME")
    if max_retries is None:
        max_retries = _env_int("MIXMULT_MAX_RETRIES")
    return RunConfig(
        seed=0 if seed is None else seed,
        prime=DEFAULT_PRIME if prime is None else prime,
        max_retries=16 if max_retries is None else max_retries,
        verify=verify,
    )
