from __future__ import annotations

import pytest

from gaussreal import enumerate_canonical, is_realizable, oracle_realizable


@pytest.fixture(scope="session")
def canonical_by_n():
    """Memoized canonical diagrams per chord count (used up to n = 7)."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(enumerate_canonical(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def verdicts_by_n(canonical_by_n):
    """(diagram, criterion_says_realizable, oracle_witness) per chord count."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = [
                (d, is_realizable(d).realizable, oracle_realizable(d))
                for d in canonical_by_n(n)
            ]
        return cache[n]

    return get
