"""Ontology toolkit: OFT parsing, subsumption reasoning, validation and DL-style queries."""

from ._core import (
    KnowledgeBase,
    OntologyError,
    corpus_queries,
    load_corpus,
    parse_oft,
    run_cli,
)

__all__ = [
    "KnowledgeBase",
    "OntologyError",
    "corpus_queries",
    "load_corpus",
    "parse_oft",
    "run_cli",
]
