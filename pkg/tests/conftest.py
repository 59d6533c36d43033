import pathlib

import pytest

from recast import EmbeddingTable, Lexicon, NgramModel, ReferenceBackend

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def reference_backend() -> ReferenceBackend:
    return ReferenceBackend(
        lexicon=Lexicon.load(str(FIXTURES / "lexicon.tsv")),
        embeddings=EmbeddingTable.load(str(FIXTURES / "embeddings.txt")),
        ngram=NgramModel.load(str(FIXTURES / "corpus.txt")),
    )


@pytest.fixture
def toy_backend() -> ReferenceBackend:
    """Hand-checkable backend: two lexicon words, tiny embedding clusters,
    two-sentence corpus."""
    lexicon = Lexicon({"stupid": 3.0, "idiot": 3.0})
    embeddings = EmbeddingTable(
        {
            "stupid": [1.0, 0.0, 0.1],
            "foolish": [0.95, 0.05, 0.1],
            "unwise": [0.9, 0.1, 0.05],
            "idiot": [0.0, 1.0, 0.1],
            "person": [0.05, 0.95, 0.1],
        }
    )
    ngram = NgramModel()
    ngram.train_text("the cat sat. the dog sat.")
    return ReferenceBackend(lexicon, embeddings, ngram)


class ConstantBackend:
    """Contract-conforming mock: fixed score, fixed attention, no vocab."""

    name = "constant"

    def __init__(self, score: float = 0.5, attention: float = 1.0):
        self._score = score
        self._attention = attention

    def score(self, text: str) -> float:
        return self._score

    def token_attention(self, doc) -> list[float]:
        return [self._attention] * len(doc.tokens)

    def mask_fill(self, doc, span, k):
        doc.validate_span(span)
        return []

    def nearest_neighbors(self, word, k):
        return []


@pytest.fixture
def constant_backend() -> ConstantBackend:
    return ConstantBackend()
