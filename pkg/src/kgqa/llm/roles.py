"""Model roles and their prompt templates.

Each role has exactly one template. Placeholders use {name} syntax and every
placeholder must be bound at render time; rendering is plain substitution so
identical variables always produce identical prompts.
"""

from __future__ import annotations

import re
from enum import Enum

from kgqa.errors import MissingVariable


class LlmRole(str, Enum):
    QUESTION_DECOMPOSITION = "QuestionDecomposition"
    FORMAL_QUERY_GENERATION = "FormalQueryGeneration"
    ANSWER_INTEGRATION = "AnswerIntegration"
    KNOWLEDGE_DECOMPOSITION = "KnowledgeDecomposition"
    KNOWLEDGE_COMPLETION = "KnowledgeCompletion"
    RAG_VERIFICATION = "RagVerification"
    DIRECT_ANSWER = "DirectAnswer"


TEMPLATES: dict[LlmRole, str] = {
    LlmRole.QUESTION_DECOMPOSITION: (
        "Break the question into the short retrieval steps needed to answer it "
        "from a knowledge graph. Output one step per line as `1. <step>`.\n"
        "Question: {question}\n"
        "Steps:"
    ),
    LlmRole.FORMAL_QUERY_GENERATION: (
        "Translate the retrieval steps into a query program, one step per line, "
        'formatted `<i>. <Function>("arg",...) <- [deps]` with indices from 0.\n'
        'Functions: FindAll(); Find("label"); FilterConcept("concept") <- [set]; '
        'FilterAttrEq("key","value") <- [set]; Relate("predicate","forward"|"backward") <- [set]; '
        'QueryAttr("key") <- [set]; QueryName() <- [set]; Count() <- [set]; '
        "And() <- [a,b]; Or() <- [a,b].\n"
        'Relate("p","forward") follows edges subject-to-object; "backward" follows them '
        "object-to-subject.\n"
        "Steps:\n{steps}\n"
        "Program:"
    ),
    LlmRole.ANSWER_INTEGRATION: (
        "Write a clear, complete answer to the question, grounded only in the "
        "facts below.\n"
        "Question: {question}\n"
        "Facts: {facts}\n"
        "Answer:"
    ),
    LlmRole.KNOWLEDGE_DECOMPOSITION: (
        "The graph query failed. State the facts that would be needed to answer, "
        "one per line, as (subject; predicate; object) with ? for each unknown slot.\n"
        "Question: {question}\n"
        "Steps:\n{steps}\n"
        "Missing facts:"
    ),
    LlmRole.KNOWLEDGE_COMPLETION: (
        "Fill in the unknown slots from your own knowledge. Echo one completed "
        "triple per line, in the same order, keeping the known slots exactly as "
        "given.{feedback}\n"
        "Question: {question}\n"
        "Incomplete triples:\n{triples}\n"
        "Completed triples:"
    ),
    LlmRole.RAG_VERIFICATION: (
        "Check the completed triples against the documents and output corrected "
        "triples, one per line, in the same order, keeping the known slots of the "
        "incomplete triples exactly as given.\n"
        "Question: {question}\n"
        "Incomplete triples:\n{incomplete}\n"
        "Completed triples:\n{completed}\n"
        "Documents:\n{documents}\n"
        "Corrected triples:"
    ),
    LlmRole.DIRECT_ANSWER: (
        "Answer the question from your own knowledge.\n"
        "Question: {question}\n"
        "Answer:"
    ),
}

_PLACEHOLDER = re.compile(r"\{([a-z_]+)\}")


def render_prompt(role: LlmRole, variables: dict[str, str]) -> str:
    """Substitute every placeholder of the role's template; unbound names fail."""
    template = TEMPLATES[role]

    def _sub(match: re.Match) -> str:
        name = match.group(1)
        if name not in variables:
            raise MissingVariable(name)
        return variables[name]

    return _PLACEHOLDER.sub(_sub, template)


def format_documents(texts: list[str]) -> str:
    """Number evidence documents 1..n in the order they were retrieved."""
    return "\n".join(f"Document {i}: {text}" for i, text in enumerate(texts, start=1))
