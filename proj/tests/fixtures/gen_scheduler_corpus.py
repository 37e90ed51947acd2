"""Regenerates scheduler_corpus.json. The committed file is the fixture;
tests never call a random generator at run time."""
import json
import random

rng = random.Random(20261018)
cases = []
for idx in range(60):
    n = rng.randint(1, 14)
    native = rng.sample(range(0, 200), n)
    window = rng.randint(1, 6)
    kind = rng.choice(["native", "min_first", "max_first", "explicit"])
    k = rng.randint(1, n)
    case = {"native": native, "window": window, "kind": kind, "k": k}
    if kind == "explicit":
        buffered, nxt, choices = 0, 0, []
        for _ in range(k):
            while buffered < window and nxt < n:
                buffered += 1
                nxt += 1
            choices.append(rng.randrange(buffered))
            buffered -= 1
        case["choices"] = choices
    cases.append(case)

with open("scheduler_corpus.json", "w") as f:
    json.dump(cases, f, indent=1)
    f.write("\n")
