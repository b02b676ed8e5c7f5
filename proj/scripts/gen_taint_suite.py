#!/usr/bin/env python3
"""Writes the taint/PDG fixture suite: small functions mixing sources,
propagation, sanitizers, branches, loops and sinks."""
import random
import sys

VARS = ["a", "b", "c", "q"]
SINKS = ["conn.execute({})", "os.system({})", "render_html({})", "subprocess.run({})", "log_value({})"]


def stmt(rng, ind, depth, budget):
    pad = "    " * ind
    v, w = rng.choice(VARS), rng.choice(VARS)
    kind = rng.choice(["src", "prop", "prop", "san", "sink", "sink", "if", "for", "while"] if depth < 2 and budget[0] > 0
                      else ["src", "prop", "prop", "san", "sink", "sink"])
    if kind == "src":
        call = rng.choice(['input("v")', 'request_args("k")', "get_param(w)"])
        return [f"{pad}{v} = {call}"]
    if kind == "prop":
        rhs = rng.choice([f'"SELECT x FROM t WHERE k = " + {w}', f"{w} + {rng.choice(VARS)}", f"fmt({w})", f'"echo " + {w}'])
        return [f"{pad}{v} = {rhs}"]
    if kind == "san":
        return [f"{pad}{v} = {rng.choice(['int', 'escape', 'shlex.quote'])}({w})"]
    if kind == "sink":
        return [pad + rng.choice(SINKS).format(w)]
    budget[0] -= 1
    out = []
    if kind == "if":
        out.append(f"{pad}if {w}:")
        out += block(rng, ind + 1, depth + 1, budget)
        if rng.random() < 0.5:
            out.append(f"{pad}else:")
            out += block(rng, ind + 1, depth + 1, budget)
    elif kind == "for":
        out.append(f"{pad}for {v} in {w}:")
        out += block(rng, ind + 1, depth + 1, budget)
    else:
        out.append(f"{pad}while {w}:")
        out += block(rng, ind + 1, depth + 1, budget)
        out.append(f"{pad}    {w} = step({w})")
    return out


def block(rng, ind, depth, budget):
    out = []
    for _ in range(rng.randint(1, 3)):
        out += stmt(rng, ind, depth, budget)
    return out


def main(path, seed=11, count=36):
    rng = random.Random(seed)
    lines = ["import os", "import shlex", "import subprocess", ""]
    for i in range(count):
        params = ["conn", rng.choice(["user_input", "limit", "req", "n"])]
        lines += ["", f"def case_{i:02d}({', '.join(params)}):"]
        budget = [3]
        first = rng.choice(['input("a")', 'request_args("a")', params[1]])
        body = [f"    a = {first}"]
        for _ in range(rng.randint(3, 6)):
            body += stmt(rng, 1, 0, budget)
        lines += body
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/taint/suite.py")
