from pathlib import Path

import pytest

from tempcoh import parse_axioms, parse_lexicon

REPO_ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = REPO_ROOT / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def lexicon():
    return parse_lexicon((CORPUS_DIR / "lexicon.txt").read_text())


@pytest.fixture(scope="session")
def axioms():
    return parse_axioms((CORPUS_DIR / "axioms.txt").read_text())
