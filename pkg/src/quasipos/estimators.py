"""scikit-learn compatible wrappers.

``X`` is a one-dimensional collection of words (strings in the compact
alphabet or :class:`~quasipos.words.Word` objects). Nothing is learned:
``fit`` only validates the input and fixes the rank, so the estimators can
sit inside pipelines and grid searches over ``strategy``.
"""
from __future__ import annotations

from typing import List, Optional

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .factorizer import factor_qp, format_factorization
from .rbs import find_rbs, rbs_to_witness
from .recognizer import test_qp
from .words import MAX_RANK, Word, free_reduce, infer_rank, parse_word
from .workbench import run_strategy

CLASSIFIER_STRATEGIES = ("naive", "pruned", "rbs", "brute")


def _raw_items(X) -> list:
    if isinstance(X, (str, Word)):
        raise ValueError("expected a collection of words, got a single word")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise ValueError(f"expected a 1-d collection of words, got shape {X.shape}")
    items = list(X)
    for x in items:
        if not isinstance(x, (str, Word)):
            raise TypeError(f"words must be str or Word, got {type(x).__name__}")
    return items


def infer_words_rank(X) -> int:
    rank = 2
    for x in _raw_items(X):
        rank = max(rank, x.rank if isinstance(x, Word) else infer_rank(x))
    return rank


def check_words(X, rank: Optional[int] = None) -> List[Word]:
    """Validate ``X`` and convert every entry to a :class:`Word` of ``rank``."""
    items = _raw_items(X)
    if rank is None:
        rank = infer_words_rank(items)
    if not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}")
    words = []
    for x in items:
        if isinstance(x, Word):
            if x.rank > rank:
                raise ValueError(f"word {x} has rank {x.rank} > {rank}")
            words.append(Word(x.letters, rank))
        else:
            words.append(parse_word(x, rank))
    return words


class QuasiPositivityClassifier(ClassifierMixin, BaseEstimator):
    """Predicts ``True`` for quasi-positive words.

    Parameters
    ----------
    strategy : {"naive", "pruned", "rbs", "brute"}
    rank : int or None
        Basis size; inferred from the training words when None.
    """

    def __init__(self, strategy: str = "pruned", rank: Optional[int] = None):
        self.strategy = strategy
        self.rank = rank

    def fit(self, X, y=None):
        if self.strategy not in CLASSIFIER_STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        self.rank_ = self.rank if self.rank is not None else infer_words_rank(X)
        check_words(X, self.rank_)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "rank_")
        words = check_words(X, self.rank_)
        return np.array([run_strategy(w, self.strategy)[0] for w in words], dtype=bool)

    def work(self, X) -> np.ndarray:
        """Deterministic work count per word (see ``run_strategy``)."""
        check_is_fitted(self, "rank_")
        words = check_words(X, self.rank_)
        return np.array([run_strategy(w, self.strategy)[1] for w in words], dtype=np.int64)


class QuasiPositiveFactorizer(TransformerMixin, BaseEstimator):
    """Maps each word to its factorization text, or ``None`` if not quasi-positive.

    Parameters
    ----------
    strategy : {"pruned", "naive", "rbs"}
        Source of the witness tree handed to the factorizer.
    rank : int or None
    """

    def __init__(self, strategy: str = "pruned", rank: Optional[int] = None):
        self.strategy = strategy
        self.rank = rank

    def fit(self, X, y=None):
        if self.strategy not in ("naive", "pruned", "rbs"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        self.rank_ = self.rank if self.rank is not None else infer_words_rank(X)
        check_words(X, self.rank_)
        return self

    def _one(self, w: Word) -> Optional[str]:
        w = free_reduce(w)
        if self.strategy == "rbs":
            r = find_rbs(w)
            t = None if r is None else rbs_to_witness(w, r)
        else:
            t = test_qp(w, self.strategy, record_witness=True).witness
        return None if t is None else format_factorization(factor_qp(t))

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "rank_")
        words = check_words(X, self.rank_)
        return np.array([self._one(w) for w in words], dtype=object)
