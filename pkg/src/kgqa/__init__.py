"""Knowledge-graph question answering with model-assisted gap completion.

Questions are answered from the knowledge graph when it can; when it cannot,
the missing facts are made explicit as incomplete triples, filled in from the
language model, used to answer, and queued for evidence-backed review so the
graph grows toward what users actually ask.
"""

__version__ = "0.1.0"
