#!/usr/bin/env python3
# Scorer plugin that replies with something other than JSON.
import sys

for line in sys.stdin:
    sys.stdout.write("score: high\n")
    sys.stdout.flush()
