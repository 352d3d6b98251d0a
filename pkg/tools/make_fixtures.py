"""Regenerate the packaged fixture files (KG, corpus, script, eval set).

Run from the repo root:  python tools/make_fixtures.py
Output is deterministic; the committed fixtures are this script's output.
"""

from __future__ import annotations

import json
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "kgqa" / "fixtures"

HIT_QUESTION = "What is the capital of France?"
BORN_QUESTION = "Where was Marie Curie born?"

# (country, capital); capitals deliberately avoid every label in the KG fixture
COUNTRIES = [
    ("Italy", "Rome"),
    ("Spain", "Madrid"),
    ("Portugal", "Lisbon"),
    ("Austria", "Vienna"),
    ("Greece", "Athens"),
    ("Norway", "Oslo"),
    ("Sweden", "Stockholm"),
    ("Finland", "Helsinki"),
    ("Denmark", "Copenhagen"),
    ("Ireland", "Dublin"),
    ("Netherlands", "Amsterdam"),
    ("Belgium", "Brussels"),
    ("Switzerland", "Bern"),
    ("Czechia", "Prague"),
    ("Hungary", "Budapest"),
    ("Romania", "Bucharest"),
    ("Bulgaria", "Sofia"),
    ("Croatia", "Zagreb"),
    ("Slovenia", "Ljubljana"),
    ("Estonia", "Tallinn"),
]
N_DIRECT_CORRECT = 8  # 40% of 20
N_COMPLETION_CORRECT = 12  # 60% of 20


def write_jsonl(path: Path, records: list[dict]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), "utf-8")


def kg_records() -> list[dict]:
    def entity(eid, label, concepts, attributes=None):
        return {
            "type": "entity",
            "id": eid,
            "label": label,
            "concepts": concepts,
            "attributes": attributes or {},
        }

    def quantity(n):
        return [{"kind": "quantity", "number": str(n), "unit": ""}]

    def year(y):
        return [{"kind": "year", "year": y}]

    def text(t):
        return [{"kind": "text", "text": t}]

    return [
        entity("france", "France", ["country"], {"official_language": text("French")}),
        entity("paris", "Paris", ["city"], {"population": quantity(2161000)}),
        entity("germany", "Germany", ["country"]),
        entity("berlin", "Berlin", ["city"], {"population": quantity(3645000)}),
        entity("marie_curie", "Marie Curie", ["human"], {"date_of_birth": year(1867)}),
        entity("warsaw", "Warsaw", ["city"]),
        entity("u_paris", "University of Paris", ["university"], {"inception": year(1150)}),
        {"type": "edge", "subject": "france", "predicate": "capital", "object": "paris"},
        {"type": "edge", "subject": "germany", "predicate": "capital", "object": "berlin"},
        {"type": "edge", "subject": "marie_curie", "predicate": "place_of_birth", "object": "warsaw"},
        {"type": "edge", "subject": "marie_curie", "predicate": "educated_at", "object": "u_paris"},
        {"type": "edge", "subject": "u_paris", "predicate": "located_in", "object": "paris"},
    ]


def corpus_records() -> list[dict]:
    docs = [
        ("france", "France", "France is a country in Western Europe. The capital of France is Paris. The official language of France is French. France borders Germany, Italy and Spain."),
        ("paris", "Paris", "Paris is the capital and largest city of France. The population of Paris is 2161000. Paris hosts the University of Paris, founded around 1150."),
        ("germany", "Germany", "Germany is a country in Central Europe. The capital of Germany is Berlin. The population of Berlin is 3645000."),
        ("marie_curie", "Marie Curie", "Marie Curie was a physicist and chemist. Marie Curie was born in Warsaw in 1867. She was educated at the University of Paris and carried out her prize winning research in Paris."),
        ("warsaw", "Warsaw", "Warsaw is the largest city of Poland and lies on the Vistula river."),
        ("university_of_paris", "University of Paris", "The University of Paris emerged around 1150 and is located in Paris. It was one of the earliest universities in Europe."),
        ("rivers", "European rivers", "The Seine flows through Paris. The Spree flows through Berlin. The Vistula flows through Warsaw."),
        ("capitals", "European capitals", "Many countries keep their seat of government in their largest city, but a capital is not always the largest city of a country."),
    ]
    return [{"id": i, "title": t, "text": x} for i, t, x in docs]


def demo_script() -> list[dict]:
    entries: list[dict] = []

    def exact(role, variables, response):
        entries.append({"role": role, "match": {"exact": variables}, "response": response})

    def pattern(role, needle, response):
        entries.append({"role": role, "match": {"pattern": needle}, "response": response})

    # -- demo question 1: capital of France (hit, miss, verify) --------------
    q1 = HIT_QUESTION
    q1_steps = "1. Find the entity France\n2. Follow the capital relation\n3. Return the name of the capital"
    q1_program = '0. Find("France")\n1. Relate("capital","forward") <- [0]\n2. QueryName() <- [1]'
    exact("QuestionDecomposition", {"question": q1}, q1_steps)
    exact("FormalQueryGeneration", {"steps": q1_steps}, q1_program)
    exact("AnswerIntegration", {"question": q1, "facts": "Paris"}, "The capital of France is Paris.")
    exact("KnowledgeDecomposition", {"question": q1, "steps": q1_steps}, "(France; capital; ?)")
    exact(
        "KnowledgeCompletion",
        {"question": q1, "triples": "(France; capital; ?)", "feedback": ""},
        "(France; capital; Paris)",
    )
    exact(
        "AnswerIntegration",
        {"question": q1, "facts": "(France; capital; Paris)"},
        "The capital of France is Paris.",
    )
    pattern("RagVerification", "(France; capital; Paris)", "(France; capital; Paris)")
    exact("DirectAnswer", {"question": q1}, "I believe the capital of France is Paris.")

    # -- demo question 2: Marie Curie's birthplace (hit) ----------------------
    q2 = BORN_QUESTION
    q2_steps = "1. Find the entity Marie Curie\n2. Follow the place_of_birth relation\n3. Return the name of the birthplace"
    q2_program = '0. Find("Marie Curie")\n1. Relate("place_of_birth","forward") <- [0]\n2. QueryName() <- [1]'
    exact("QuestionDecomposition", {"question": q2}, q2_steps)
    exact("FormalQueryGeneration", {"steps": q2_steps}, q2_program)
    exact("AnswerIntegration", {"question": q2, "facts": "Warsaw"}, "Marie Curie was born in Warsaw.")
    exact("KnowledgeDecomposition", {"question": q2, "steps": q2_steps}, "(Marie Curie; place_of_birth; ?)")
    exact(
        "KnowledgeCompletion",
        {"question": q2, "triples": "(Marie Curie; place_of_birth; ?)", "feedback": ""},
        "(Marie Curie; place_of_birth; Warsaw)",
    )
    exact(
        "AnswerIntegration",
        {"question": q2, "facts": "(Marie Curie; place_of_birth; Warsaw)"},
        "Marie Curie was born in Warsaw.",
    )
    pattern("RagVerification", "(Marie Curie; place_of_birth; Warsaw)", "(Marie Curie; place_of_birth; Warsaw)")
    exact("DirectAnswer", {"question": q2}, "Marie Curie was born in Warsaw.")

    # -- synthetic eval items --------------------------------------------------
    for i, (country, capital) in enumerate(COUNTRIES):
        q = f"What is the capital of {country}?"
        steps = f"1. Find the entity {country}\n2. Look up its capital attribute"
        program = f'0. Find("{country}")\n1. QueryAttr("capital") <- [0]'
        wrong = COUNTRIES[(i + 3) % len(COUNTRIES)][1]
        completion = capital if i < N_COMPLETION_CORRECT else wrong

        exact("QuestionDecomposition", {"question": q}, steps)
        exact("FormalQueryGeneration", {"steps": steps}, program)
        exact("AnswerIntegration", {"question": q, "facts": capital}, f"The capital of {country} is {capital}.")
        exact("KnowledgeDecomposition", {"question": q, "steps": steps}, f"({country}; capital; ?)")
        exact(
            "KnowledgeCompletion",
            {"question": q, "triples": f"({country}; capital; ?)", "feedback": ""},
            f"({country}; capital; {completion})",
        )
        exact(
            "AnswerIntegration",
            {"question": q, "facts": f"({country}; capital; {completion})"},
            f"The capital of {country} is {completion}.",
        )
        if i < N_DIRECT_CORRECT:
            exact("DirectAnswer", {"question": q}, f"The capital of {country} is {capital}.")
        else:
            exact("DirectAnswer", {"question": q}, f"I think the capital of {country} might be {wrong}.")
    return entries


def eval_records() -> list[dict]:
    return [
        {
            "question": f"What is the capital of {country}?",
            "gold_answer": capital,
            "gold_triples": [[country, "capital", capital]],
        }
        for country, capital in COUNTRIES
    ]


def main() -> None:
    write_jsonl(FIXTURES / "kg" / "fixture.jsonl", kg_records())
    write_jsonl(FIXTURES / "corpus" / "fixture.jsonl", corpus_records())
    write_jsonl(FIXTURES / "scripts" / "demo.jsonl", demo_script())
    write_jsonl(FIXTURES / "eval" / "synthetic20.jsonl", eval_records())
    print(f"fixtures written under {FIXTURES}")


if __name__ == "__main__":
    main()
