#!/usr/bin/env python3
# Scorer plugin that answers every request with 0.42.
import json
import sys

for line in sys.stdin:
    req = json.loads(line)
    sys.stdout.write(json.dumps({"id": req["id"], "score": 0.42}) + "\n")
    sys.stdout.flush()
