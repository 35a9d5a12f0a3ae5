"""Shared fixtures for the test modules."""

import random


def seeded_starts(n: int = 20, seed: int = 2024, spread: int = 200) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    return [(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(n)]


# criterion number -> formatted PASS/FAIL line, filled by test_acceptance
ACCEPTANCE: dict[int, str] = {}


def record(n: int, ok: bool, detail: str, elapsed: float, limit: float) -> str:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  [{elapsed:.2f} s, limit {limit:g} s]"
    ACCEPTANCE[n] = line
    print(line)
    return line
