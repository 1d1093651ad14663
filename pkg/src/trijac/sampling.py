"""Deterministic rational parameter sampling with rejection accounting."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, TypeVar

T = TypeVar("T")

REDRAW_CAP_FACTOR = 1000


class RedrawCapError(RuntimeError):
    """Rejection sampling exhausted its redraw budget."""


def seeded_rng(seed: int, label: str) -> random.Random:
    # string seeding hashes seed and label together, stably across runs
    return random.Random(f"{seed}:{label}")


@dataclass
class Sampler:
    """Bounded rational draws; every rejected draw is counted, never dropped."""

    rng: random.Random
    bound: int = 9
    rejections: int = 0
    budget: int = field(default=0)

    def set_budget(self, samples: int) -> None:
        self.budget = REDRAW_CAP_FACTOR * max(samples, 1)

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(
                self.rng.randint(-self.bound, self.bound),
                self.rng.randint(1, self.bound),
            )
            if nonzero and value == 0:
                continue
            return value

    def positive_unit(self) -> Fraction:
        """A rational strictly between 0 and 1."""
        den = self.rng.randint(2, self.bound)
        num = self.rng.randint(1, den - 1)
        return Fraction(num, den)

    def admissible(self, draw: Callable[[], T], ok: Callable[[T], bool]) -> T:
        """Redraw until `ok`; raises RedrawCapError past the configured budget."""
        attempts = 0
        while True:
            candidate = draw()
            if ok(candidate):
                return candidate
            self.rejections += 1
            attempts += 1
            if self.budget and self.rejections > self.budget:
                raise RedrawCapError(
                    f"rejected {self.rejections} draws, exceeding the redraw budget"
                )

    def attempt(self, build: Callable[[], T], *errors: type[Exception]) -> T:
        """Like `admissible` but driven by constructor exceptions."""
        while True:
            try:
                return build()
            except errors:
                self.rejections += 1
                if self.budget and self.rejections > self.budget:
                    raise RedrawCapError(
                        f"rejected {self.rejections} draws, exceeding the redraw budget"
                    ) from None
