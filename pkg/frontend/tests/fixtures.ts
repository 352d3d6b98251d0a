/** Wire fixtures captured from the real service over the packaged fixtures.
 * Regenerate with tools/make_ui_fixtures.py in the repository root.
 */

import type { AskResponse, PendingRecord } from "../src/types";

export const HIT_ASK: AskResponse = {
  "trace_id": "tr:0001",
  "route": "kg_hit",
  "final_answer": "The capital of France is Paris.",
  "pending_ids": [],
  "steps": [
    {
      "type": "thought",
      "text": "Decompose the question into retrieval steps:\n1. Find the entity France\n2. Follow the capital relation\n3. Return the name of the capital",
      "tool": null
    },
    {
      "type": "action",
      "text": "1. Find the entity France\n2. Follow the capital relation\n3. Return the name of the capital",
      "tool": "query_kg"
    },
    {
      "type": "observation",
      "text": "Paris",
      "tool": null
    },
    {
      "type": "thought",
      "text": "The knowledge graph answered; composing the final response.",
      "tool": null
    },
    {
      "type": "final",
      "text": "The capital of France is Paris.",
      "tool": null
    }
  ]
};

export const BORN_ASK: AskResponse = {
  "trace_id": "tr:0002",
  "route": "kg_hit",
  "final_answer": "Marie Curie was born in Warsaw.",
  "pending_ids": [],
  "steps": [
    {
      "type": "thought",
      "text": "Decompose the question into retrieval steps:\n1. Find the entity Marie Curie\n2. Follow the place_of_birth relation\n3. Return the name of the birthplace",
      "tool": null
    },
    {
      "type": "action",
      "text": "1. Find the entity Marie Curie\n2. Follow the place_of_birth relation\n3. Return the name of the birthplace",
      "tool": "query_kg"
    },
    {
      "type": "observation",
      "text": "Warsaw",
      "tool": null
    },
    {
      "type": "thought",
      "text": "The knowledge graph answered; composing the final response.",
      "tool": null
    },
    {
      "type": "final",
      "text": "Marie Curie was born in Warsaw.",
      "tool": null
    }
  ]
};

export const MISS_ASK: AskResponse = {
  "trace_id": "tr:0003",
  "route": "kg_miss",
  "final_answer": "The capital of France is Paris.",
  "pending_ids": [
    "pr:0001"
  ],
  "steps": [
    {
      "type": "thought",
      "text": "Decompose the question into retrieval steps:\n1. Find the entity France\n2. Follow the capital relation\n3. Return the name of the capital",
      "tool": null
    },
    {
      "type": "action",
      "text": "1. Find the entity France\n2. Follow the capital relation\n3. Return the name of the capital",
      "tool": "query_kg"
    },
    {
      "type": "observation",
      "text": "Failed",
      "tool": null
    },
    {
      "type": "thought",
      "text": "The graph query failed; the missing facts are:\n(France; capital; ?)",
      "tool": null
    },
    {
      "type": "action",
      "text": "What is the capital of France?\n(France; capital; ?)",
      "tool": "complete_knowledge"
    },
    {
      "type": "observation",
      "text": "(France; capital; Paris)",
      "tool": null
    },
    {
      "type": "thought",
      "text": "Answering from model-completed facts; queueing them for review.",
      "tool": null
    },
    {
      "type": "final",
      "text": "The capital of France is Paris.",
      "tool": null
    }
  ]
};

export const PENDING_RECORD: PendingRecord = {
  "id": "pr:0001",
  "question": "What is the capital of France?",
  "incomplete": [
    [
      "France",
      "capital",
      null
    ]
  ],
  "completed": [
    [
      "France",
      "capital",
      "Paris"
    ]
  ],
  "corrected": null,
  "edited": null,
  "evidence": [],
  "status": "pending",
  "history": [
    {
      "action": "enqueue",
      "actor": "agent",
      "ts": "2024-01-01T00:00:02Z"
    }
  ],
  "created_at": "2024-01-01T00:00:02Z",
  "outcomes": []
};

export const VERIFIED_RECORD: PendingRecord = {
  "id": "pr:0001",
  "question": "What is the capital of France?",
  "incomplete": [
    [
      "France",
      "capital",
      null
    ]
  ],
  "completed": [
    [
      "France",
      "capital",
      "Paris"
    ]
  ],
  "corrected": [
    [
      "France",
      "capital",
      "Paris"
    ]
  ],
  "edited": null,
  "evidence": [
    {
      "doc_id": "france",
      "chunk_index": 0,
      "score": 3.9910818614665815,
      "text": "france is a country in western europe the capital of france is paris the official language of france is french france borders germany italy and spain"
    },
    {
      "doc_id": "paris",
      "chunk_index": 0,
      "score": 3.5087975575927945,
      "text": "paris is the capital and largest city of france the population of paris is 2161000 paris hosts the university of paris founded around 1150"
    },
    {
      "doc_id": "germany",
      "chunk_index": 0,
      "score": 1.5953255809669562,
      "text": "germany is a country in central europe the capital of germany is berlin the population of berlin is 3645000"
    },
    {
      "doc_id": "university_of_paris",
      "chunk_index": 0,
      "score": 1.344004181370594,
      "text": "the university of paris emerged around 1150 and is located in paris it was one of the earliest universities in europe"
    },
    {
      "doc_id": "capitals",
      "chunk_index": 0,
      "score": 1.2947438063765688,
      "text": "many countries keep their seat of government in their largest city but a capital is not always the largest city of a country"
    },
    {
      "doc_id": "marie_curie",
      "chunk_index": 0,
      "score": 0.7968357215116538,
      "text": "marie curie was a physicist and chemist marie curie was born in warsaw in 1867 she was educated at the university of paris and carried out her prize winning research in paris"
    },
    {
      "doc_id": "warsaw",
      "chunk_index": 0,
      "score": 0.6952649304067845,
      "text": "warsaw is the largest city of poland and lies on the vistula river"
    },
    {
      "doc_id": "rivers",
      "chunk_index": 0,
      "score": 0.6591728124928451,
      "text": "the seine flows through paris the spree flows through berlin the vistula flows through warsaw"
    }
  ],
  "status": "verified",
  "history": [
    {
      "action": "enqueue",
      "actor": "agent",
      "ts": "2024-01-01T00:00:02Z"
    },
    {
      "action": "verify",
      "actor": "admin",
      "ts": "2024-01-01T00:00:04Z"
    }
  ],
  "created_at": "2024-01-01T00:00:02Z",
  "outcomes": []
};
