from pathlib import Path

import pytest

from petersen_tsg.corpus import default_corpus_dir, load_corpus
from petersen_tsg.engine import invariant_profile


@pytest.fixture(scope="session")
def corpus_dir():
    return Path(str(default_corpus_dir()))


@pytest.fixture(scope="session")
def corpus():
    return {e.name: e for e in load_corpus()}


@pytest.fixture(scope="session")
def profiles(corpus):
    return {name: invariant_profile(e.diagram) for name, e in corpus.items()}


@pytest.fixture(scope="session")
def reports(corpus):
    return {name: e.classify() for name, e in corpus.items()}
