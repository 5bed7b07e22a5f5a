"""Shared fixtures: exhaustive semigroup families reused across modules."""

from __future__ import annotations

import pytest

from arfkit import enumerate_arf_semigroups, enumerate_semigroups


@pytest.fixture(scope="session")
def family15():
    return list(enumerate_semigroups(15))


@pytest.fixture(scope="session")
def family25():
    return list(enumerate_semigroups(25))


@pytest.fixture(scope="session")
def family30():
    return list(enumerate_semigroups(30))


@pytest.fixture(scope="session")
def arf_family40():
    return list(enumerate_arf_semigroups(40))
