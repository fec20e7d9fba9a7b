from __future__ import annotations

from pathlib import Path

import pytest

from coauthnet.corpus import Corpus, load_corpus

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
SCHEMA_DIR = REPO_ROOT / "schema"


@pytest.fixture(scope="session")
def fixture_members() -> Path:
    return FIXTURES / "members.csv"


@pytest.fixture(scope="session")
def fixture_papers() -> Path:
    return FIXTURES / "papers.csv"


@pytest.fixture(scope="session")
def fixture_corpus(fixture_members: Path, fixture_papers: Path) -> Corpus:
    return load_corpus(fixture_members, fixture_papers)
