"""Regenerates the toy embedding fixtures for the mini cluster.

The contextual rows mirror the engine tokenizer for plain ASCII text:
lowercase, split on whitespace and hyphens, strip edge punctuation, drop
function words from data/stopwords_en.txt.
"""
import json
import random
import string
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent.parent

STOP = set((ROOT / "data" / "stopwords_en.txt").read_text().split())
TOY = ["storm", "coast", "monday", "rain", "flooded", "towns", "residents", "leave",
       "homes", "rescue", "families", "struck", "wind", "damaged", "power",
       "government", "aid", "hit", "land", "officials"]


def tokenize(text):
    out = []
    for piece in text.replace("-", " ").split():
        piece = piece.strip(string.punctuation).lower()
        if piece:
            out.append(piece)
    return out


def main():
    rng = random.Random(7)
    table = {t: [round(rng.uniform(-1, 1), 3) for _ in range(4)] for t in TOY}
    # Weather words share a common direction so they end up close.
    for t in ["storm", "rain", "wind", "flooded", "struck", "hit"]:
        table[t][0] = round(table[t][0] + 1.5, 3)
    lines = ["%d %d" % (len(TOY), 4)]
    lines += [t + " " + " ".join("%.3f" % v for v in table[t]) for t in TOY]
    (HERE / "toy_embeddings.txt").write_text("\n".join(lines) + "\n")

    cluster = json.loads((HERE / "mini_cluster.json").read_text())
    rows = [json.dumps({"meta": {"model": "toy", "layer": "final"}})]
    sent_id = 0
    for doc in cluster["documents"]:
        for text in doc["sentences"]:
            tokens = [t for t in tokenize(text) if t not in STOP]
            vectors = []
            for pos, tok in enumerate(tokens):
                base = table.get(tok)
                if base is None:
                    trng = random.Random(tok)
                    base = [round(trng.uniform(-1, 1), 3) for _ in range(4)]
                vectors.append([round(v + 0.01 * (pos + 1), 4) for v in base])
            rows.append(json.dumps({"doc_id": doc["doc_id"], "sent_id": sent_id,
                                    "tokens": tokens, "vectors": vectors}))
            sent_id += 1
    (HERE / "mini_cluster.contextual.jsonl").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
