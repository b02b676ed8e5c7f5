#!/usr/bin/env python3
"""Writes the labelled evaluation corpus and the repair and risk fixture sets.

Filler is random but checked: no window of 30 normalised tokens (identifiers
become ID, literals LIT) may repeat anywhere in the corpus except inside the
clone pairs seeded on purpose, so every duplicated-code finding has a label.

Labelling policy:
  LongMethod      functions with more than 30 statements of computation;
                  flat tables of constant bindings are not labelled.
  injections      a source reaching the sink unsanitised.
  HardcodedSecret credential-named string constants, and high-entropy
                  literals used as key material; content digests are not.
  DuplicatedCode  the earlier copy of each seeded pair.
  class smells    the seeded GodClass, DataClass and FeatureEnvy entities.
"""
import io
import json
import math
import random
import sys
import tokenize
from collections import Counter
from pathlib import Path

WINDOW = 30
KEYWORDS = {"and", "as", "break", "class", "continue", "def", "elif", "else", "except", "finally", "for", "from",
            "if", "import", "in", "is", "not", "or", "pass", "raise", "return", "try", "while", "None", "True",
            "False"}

# No lexicon cue words, taint names, or credential fragments.
NOUNS = ["width", "height", "depth", "margin", "offset", "ratio", "level", "weight", "count", "step", "stride",
         "limit", "bound", "slot", "bucket", "lane", "tier", "grade", "phase", "cycle", "batch", "chunk", "frame",
         "tile", "cell", "node", "edge", "route", "stage", "quota", "share", "bonus", "fee", "rate", "price", "cost",
         "qty", "pack", "crate", "shelf", "bin", "zone", "area", "volume", "mass", "speed", "delay", "pause", "tick",
         "score", "rank", "band", "gap", "pad", "peak", "base", "floor", "cap", "row", "col", "hop", "lap", "dose"]
VERBS = ["scale", "shift", "clamp", "blend", "merge", "split", "align", "trim", "spread", "settle", "adjust", "weigh",
         "tally", "bump", "fold", "wrap", "stack", "rotate", "nudge", "smooth", "cull", "pick", "reorder", "balance",
         "measure", "estimate", "project", "sample", "stretch", "squash", "snap", "tune", "pace", "grade", "mend"]
HELPERS = ["norm", "lerp", "mix", "bound_to", "halve", "twice", "pick_one", "size_of", "first_of", "last_of",
           "head_of", "tail_of", "pair_up", "flat", "chunked", "weigh_all", "len", "min", "max", "abs", "sorted"]
WORDS = ["north", "south", "amber", "teal", "left", "right", "upper", "lower", "alpha", "beta", "gamma", "plain",
         "bold", "wide", "slim", "early", "late", "draft", "final", "spare"]
CMP = ["<", ">", "<=", ">=", "==", "!="]


def normalized(text):
    out = []
    for tok in tokenize.generate_tokens(io.StringIO(text).readline):
        line = tok.start[0]
        if tok.type == tokenize.NAME:
            out.append((tok.string if tok.string in KEYWORDS else "ID", line))
        elif tok.type in (tokenize.NUMBER, tokenize.STRING):
            out.append(("LIT", line))
        elif tok.type == tokenize.OP:
            out.append((tok.string, line))
    return out


def entropy(s):
    n = len(s)
    return -sum(c / n * math.log2(c / n) for c in Counter(s).values())


class Gen:
    """Random statement-level code with bounded nesting and branching."""

    def __init__(self, rng):
        self.rng = rng

    def name(self):
        return self.rng.choice(NOUNS) + self.rng.choice(["", "_a", "_b", "s", "_n", "_x", "2"])

    def literal(self):
        r = self.rng.random()
        if r < 0.55:
            return str(self.rng.randint(0, 400))
        if r < 0.8:
            return "%d.%d" % (self.rng.randint(0, 40), self.rng.randint(1, 9))
        return '"%s"' % self.rng.choice(WORDS)

    def leaf(self, names):
        if names and self.rng.random() < 0.65:
            return self.rng.choice(names)
        return self.literal()

    def expr(self, names, depth=2, quiet=False):
        rng = self.rng
        if depth <= 0 or rng.random() < 0.3:
            return self.leaf(names)
        k = rng.random()
        ops = ["-", "*", "//"] if quiet else ["+", "-", "*", "//", "%", "+"]
        if k < 0.45:
            return "%s %s %s" % (self.expr(names, depth - 1, quiet), rng.choice(ops), self.expr(names, depth - 1, quiet))
        if k < 0.75:
            args = [self.expr(names, depth - 1, quiet) for _ in range(rng.randint(1, 3))]
            return "%s(%s)" % (rng.choice(HELPERS), ", ".join(args))
        if k < 0.85:
            return "(%s %s %s)" % (self.leaf(names), rng.choice(ops), self.leaf(names))
        if k < 0.93 and names:
            return "%s[%s]" % (rng.choice(names), self.leaf(names))
        return "[%s]" % ", ".join(self.leaf(names) for _ in range(rng.randint(1, 3)))

    def cond(self, names):
        c = "%s %s %s" % (self.expr(names, 1), self.rng.choice(CMP), self.leaf(names))
        return ("not " + c) if self.rng.random() < 0.1 else c

    def block(self, ind, names, depth, budget, count, quiet=False, targets=None):
        """`budget` = [decisions left]; `targets` adds writable attributes."""
        rng = self.rng
        pad = "    " * ind
        out = []
        for _ in range(count):
            r = rng.random()
            if depth < 2 and budget[0] > 0 and r < 0.3:
                budget[0] -= 1
                kind = rng.choice(["if", "if", "for", "while", "try"])
                if kind == "if":
                    out.append("%sif %s:" % (pad, self.cond(names)))
                    out += self.block(ind + 1, names, depth + 1, budget, rng.randint(1, 3), quiet, targets)
                    if rng.random() < 0.4:
                        out.append(pad + "else:")
                        out += self.block(ind + 1, names, depth + 1, budget, rng.randint(1, 2), quiet, targets)
                elif kind == "for":
                    v = rng.choice(["i", "j", "k", "n", "m"])
                    src = rng.choice(["range(%d)" % rng.randint(2, 30), "sorted(%s)" % self.leaf(names) if names
                                      else "range(4)", self.leaf(names) if names else "range(9)"])
                    out.append("%sfor %s in %s:" % (pad, v, src))
                    out += self.block(ind + 1, names + [v], depth + 1, budget, rng.randint(1, 3), quiet, targets)
                elif kind == "while":
                    v = "n" + str(rng.randint(0, 9))
                    out.append("%s%s = 0" % (pad, v))
                    out.append("%swhile %s < %d:" % (pad, v, rng.randint(2, 20)))
                    out += self.block(ind + 1, names + [v], depth + 1, budget, rng.randint(1, 2), quiet, targets)
                    out.append("%s    %s += %d" % (pad, v, rng.randint(1, 3)))
                    names.append(v)
                else:
                    out.append(pad + "try:")
                    out += self.block(ind + 1, names, depth + 1, budget, rng.randint(1, 2), quiet, targets)
                    out.append("%sexcept %s:" % (pad, rng.choice(["ValueError", "KeyError", "IndexError"])))
                    out += self.block(ind + 1, names, depth + 1, budget, 1, quiet, targets)
            elif r < 0.45 and names:
                out.append("%s%s %s= %s" % (pad, rng.choice(names), rng.choice(["-", "*"] if quiet else ["+", "-", "*"]),
                                            self.expr(names, 1, quiet)))
            elif r < 0.55:
                out.append("%s%s(%s)" % (pad, rng.choice(HELPERS[:16]), self.expr(names, 1, quiet)))
            else:
                if targets and rng.random() < 0.35:
                    t = rng.choice(targets)
                else:
                    t = self.name()
                out.append("%s%s = %s" % (pad, t, self.expr(names, 2, quiet)))
                if t not in names:
                    names.append(t)
        return out

    def function(self, fname=None, params=None, stmts=None, quiet=False):
        rng = self.rng
        fname = fname or "%s_%s" % (rng.choice(VERBS), rng.choice(NOUNS))
        if params is None:
            params = list(dict.fromkeys(self.name() for _ in range(rng.randint(0, 3))))
        names = list(params)
        lines = ["def %s(%s):" % (fname, ", ".join(params))]
        lines += self.block(1, names, 0, [rng.randint(0, 3)], stmts or rng.randint(2, 7), quiet)
        if rng.random() < 0.6:
            lines.append("    return %s" % self.expr(names, 1, quiet))
        return lines

    def method(self, fields, mname=None):
        rng = self.rng
        mname = mname or "%s_%s" % (rng.choice(VERBS), rng.choice(NOUNS))
        params = list(dict.fromkeys(self.name() for _ in range(rng.randint(0, 2))))
        names = params + ["self." + f for f in fields]
        lines = ["    def %s(%s):" % (mname, ", ".join(["self"] + params))]
        lines += self.block(2, names, 0, [rng.randint(0, 2)], rng.randint(2, 5), targets=["self." + f for f in fields])
        if rng.random() < 0.5:
            lines.append("        return %s" % self.expr(names, 1))
        return lines

    def class_name(self, suffix=""):
        return self.rng.choice(NOUNS).capitalize() + self.rng.choice(NOUNS).capitalize() + suffix

    def constructor(self, fields):
        rng = self.rng
        params = fields[: rng.randint(1, len(fields))]
        sig = [p if rng.random() < 0.7 else "%s=%s" % (p, self.literal()) for p in params]
        if rng.random() < 0.3:
            sig.append("%s=None" % self.name())
        lines = ["    def __init__(self, %s):" % ", ".join(sig)]
        order = list(fields)
        rng.shuffle(order)
        for f in order:
            if f in params:
                rhs = rng.choice([f, f, self.expr(params, 1), "%s(%s)" % (rng.choice(HELPERS), f)])
            else:
                rhs = rng.choice([self.literal(), "[]", "{}", "None", self.expr(params, 1)])
            lines.append("        self.%s = %s" % (f, rhs))
        return lines

    def klass(self, nmethods, cname=None, extra=None):
        rng = self.rng
        cname = cname or self.class_name()
        fields = list(dict.fromkeys(rng.choice(NOUNS) for _ in range(rng.randint(2, 4))))
        lines = ["class %s:" % cname]
        if rng.random() < 0.3:
            lines.append('    """%s %s."""' % (rng.choice(WORDS).capitalize(), rng.choice(NOUNS)))
        lines += self.constructor(fields)
        methods = [self.method(fields) for _ in range(nmethods)]
        if extra:
            methods.insert(rng.randint(0, len(methods)), extra(fields))
        for m in methods:
            lines += [""] + m
        return lines


class Piece:
    def __init__(self, lines, labels=(), tag=None):
        self.lines = lines
        self.labels = list(labels)  # (category, cwe, first, last) relative to the piece
        self.tag = tag


# ---- seeded cases ------------------------------------------------------------------


def long_strong(g):
    """Procedural logic: loops, branches and early exits."""
    rng = g.rng
    params = ["rows", g.name(), g.name()]
    params = list(dict.fromkeys(params))
    names = list(params)
    lines = ["def %s_%s(%s):" % (rng.choice(VERBS), rng.choice(NOUNS), ", ".join(params))]
    body = []
    while sum(1 for l in body if l.strip() and not l.strip().endswith(":")) < rng.randint(30, 38):
        body += g.block(1, names, 0, [1], 1)
        if rng.random() < 0.2:
            v = rng.choice(["i", "j", "k"])
            body.append("    for %s in rows:" % v)
            body.append("        if %s %s %s:" % (v, rng.choice(CMP), g.leaf(names)))
            body += g.block(3, names + [v], 2, [0], rng.randint(1, 3))
            if rng.random() < 0.5:
                body.append("        elif %s %s %s:" % (v, rng.choice(CMP), g.leaf(names)))
                body += g.block(3, names + [v], 2, [0], rng.randint(1, 2))
    lines += body
    lines += ["    if %s:" % g.cond(names), "        return %s" % g.leaf(names), "    return %s" % g.expr(names, 1)]
    return Piece(lines, [("LongMethod", None, 0, len(lines) - 1)])


def long_weak(g, stmts):
    """Straight-line computation, one loop, barely any cue words."""
    rng = g.rng
    params = list(dict.fromkeys([g.name(), g.name()]))
    names = list(params)
    lines = ["def %s_%s(%s):" % (rng.choice(VERBS), rng.choice(NOUNS), ", ".join(params))]
    for _ in range(stmts - 4):
        t = g.name()
        lines.append("    %s = %s" % (t, g.expr(names, 2, quiet=True)))
        if t not in names:
            names.append(t)
    lines.append("    for i in %s:" % rng.choice(names))
    lines.append("        %s = %s" % (rng.choice(names), g.expr(names, 1, quiet=True)))
    lines.append("    return %s" % g.expr(names, 1, quiet=True))
    return Piece(lines, [("LongMethod", None, 0, len(lines) - 1)])


def constant_table(g):
    """Flat constant bindings: long, but nothing to extract."""
    rng = g.rng
    lines = ["def %s_%s():" % (rng.choice(["default", "initial", "preset", "factory"]), rng.choice(NOUNS) + "s")]
    used = set()
    for _ in range(rng.randint(31, 34)):
        while True:
            t = "%s_%s" % (rng.choice(NOUNS), rng.choice(NOUNS))
            if t not in used:
                used.add(t)
                break
        shape = rng.randint(0, 7)
        lit = g.literal
        v = [lit(), "-" + str(rng.randint(1, 99)), "(%s, %s)" % (lit(), lit()), "[%s, %s, %s]" % (lit(), lit(), lit()),
             "{%s: %s}" % (lit(), lit()), "None", "(%s,)" % lit(), "[%s]" % lit()][shape]
        lines.append("    %s = %s" % (t, v))
    lines.append("    return locals()")
    return Piece(lines)


def sql_case(g, kind):
    rng = g.rng
    table, col = rng.choice(NOUNS) + "s", rng.choice(NOUNS)
    src = rng.choice(["name_input", "term_input", "user_data", "untrusted_%s" % rng.choice(NOUNS)])
    fn = "%s_%s" % (rng.choice(["find", "load", "fetch", "lookup", "list"]), rng.choice(NOUNS))
    pre = ["    %s = %s" % (g.name(), g.expr(["conn"], 1, quiet=True)) for _ in range(rng.randint(0, 2))]
    if kind == "strong":
        q = rng.choice(["q", "query", "sql", "stmt"])
        body = pre + ['    %s = "SELECT * FROM %s WHERE %s = \'" + %s + "\'"' % (q, table, col, src),
                      "    cur = conn.execute(%s)" % q, "    return cur.fetchall()"]
        return Piece(["def %s(conn, %s):" % (fn, src)] + body, [("SqlInjection", 89, len(pre) + 2, len(pre) + 2)])
    if kind == "weak":
        body = ["    %s = read_request_%s()" % (col, rng.choice(["line", "text", "form"]))] + pre + \
               ["    conn.execute(%s)" % col]
        return Piece(["def %s(conn):" % fn] + body, [("SqlInjection", 89, len(body), len(body))])
    n = rng.choice(["n", "ident", "num"])
    body = ["    %s = int(%s)" % (n, src)] + \
           ['    q = "SELECT %s FROM %s WHERE id = %%d" %% %s' % (col, table, n), "    return conn.execute(q)"]
    return Piece(["def %s(conn, %s):" % (fn, src)] + body)


def cmd_case(g, kind):
    rng = g.rng
    src = rng.choice(["host_input", "path_input", "untrusted_%s" % rng.choice(NOUNS)])
    fn = "%s_%s" % (rng.choice(["archive", "probe", "sync", "list", "purge"]), rng.choice(NOUNS))
    if kind == "strong":
        cmd = rng.choice(['"tar czf /tmp/out.tgz " + %s', '"ping -c 1 " + %s', '"ls -l " + %s', '"cat " + %s'])
        body = ["    os.system(%s)" % (cmd % src)]
        if rng.random() < 0.5:
            body.insert(0, "    %s = %s" % (g.name(), g.expr([src], 1, quiet=True)))
        return Piece(["def %s(%s):" % (fn, src)] + body, [("CommandInjection", 78, len(body), len(body))])
    if kind == "weak":
        body = ["    line = read_request_%s()" % rng.choice(["line", "text"]), "    subprocess.run(line)"]
        return Piece(["def %s():" % fn] + body, [("CommandInjection", 78, 2, 2)])
    body = ["    safe = shlex.quote(%s)" % src, '    os.system("ping -c 1 " + safe)']
    return Piece(["def %s(%s):" % (fn, src)] + body)


def xss_case(g, kind):
    rng = g.rng
    src = rng.choice(["comment_input", "title_input", "user_data"])
    fn = "%s_%s" % (rng.choice(["show", "draw", "emit", "paint"]), rng.choice(NOUNS))
    if kind == "strong":
        tag = rng.choice(["div", "p", "span", "li"])
        body = ['    return render_html("<%s>" + %s + "</%s>")' % (tag, src, tag)]
        return Piece(["def %s(%s):" % (fn, src)] + body, [("Xss", 79, 1, 1)])
    if kind == "weak":
        body = ["    page = read_request_text()", "    write_html(page)"]
        return Piece(["def %s():" % fn] + body, [("Xss", 79, 2, 2)])
    body = ["    safe = escape(%s)" % src, '    return render_html("<div>" + safe + "</div>")']
    return Piece(["def %s(%s):" % (fn, src)] + body)


def random_string(rng, lo, hi, alphabet, length):
    for _ in range(10000):
        s = "".join(rng.choice(alphabet) for _ in range(length))
        low = s.lower()
        cue = any(w in low for w in ["key", "auth", "aws", "api", "token", "secret", "pass"])
        if lo <= entropy(s) < hi and not cue:
            return s
    raise RuntimeError("no string in entropy band")


def secret_case(g, kind):
    rng = g.rng
    if kind == "name":
        target = rng.choice(["db_password", "smtp_passwd", "ADMIN_PASSWORD", "service_token", "client_secret",
                             "API_KEY", "upload_credential", "session_secret"])
        value = rng.choice(["hunter2hunter", "Winter2024!", "correct-horse", "letmein123", "s3cr3t-value",
                            "changeme-now"])
        return Piece(['%s = "%s"' % (target, value)], [("HardcodedSecret", 798, 0, 0)])
    if kind == "entropy":
        value = random_string(rng, 3.8, 4.3, "ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz0123456789", 24)
        const = rng.choice(["SIGNING_SALT", "HMAC_SEED", "VENDOR_SIGNER"])
        lines = ['%s = "%s"' % (const, value), "",
                 "", "def sign_headers(%s):" % rng.choice(["msg", "payload"]),
                 "    auth_key = %s" % const, "    return mix(auth_key)"]
        return Piece(lines, [("HardcodedSecret", 798, 0, 0)])
    value = random_string(rng, 3.5, 3.7, "0123456789abcdef", 16)
    const = rng.choice(["SCHEMA_DIGEST", "BUILD_HASH", "ASSET_REVISION", "LAYOUT_CHECKSUM"])
    return Piece(['%s = "%s"' % (const, value)])


def god_class(g):
    rng = g.rng
    cname = g.class_name(rng.choice(["Manager", "Service", "Controller", "Handler"]))
    lines = g.klass(rng.randint(16, 20), cname)
    return Piece(lines, [("GodClass", None, 0, len(lines) - 1)])


def data_class(g):
    rng = g.rng
    cname = g.class_name(rng.choice(["Record", "Data", "Dto", ""]))
    fields = list(dict.fromkeys(rng.choice(NOUNS) for _ in range(rng.randint(3, 6))))
    while len(fields) < 3:
        fields.append(rng.choice(NOUNS) + "_b")
    lines = ["class %s:" % cname]
    if rng.random() < 0.4:
        lines.append('    kind = "%s"' % rng.choice(WORDS))
    lines += g.constructor(fields)
    accessors = []
    for f in fields:
        accessors.append(("get", f))
        if rng.random() < 0.6:
            accessors.append(("set", f))
    rng.shuffle(accessors)
    accessors = accessors[: rng.randint(4, max(4, len(accessors)))]
    while len(accessors) < 4:
        accessors.append(("get", rng.choice(fields)))
    for kind, f in accessors:
        lines.append("")
        arg = rng.choice(["value", "v", f])
        if kind == "get":
            lines.append("    def %s_%s(self):" % (rng.choice(["get", "read", "current"]), f))
        else:
            lines.append("    def set_%s(self, %s):" % (f, arg))
        if rng.random() < 0.35:
            lines.append('        """%s %s."""' % (rng.choice(["The", "Current", "Stored"]), f))
        lines.append("        return self.%s" % f if kind == "get" else "        self.%s = %s" % (f, arg))
    return Piece(lines, [("DataClass", None, 0, len(lines) - 1)])


def envy_class(g):
    rng = g.rng
    other = rng.choice(["other", "order", "peer", "entry"])
    attrs = rng.sample(["qty", "price", "rebate", "fee", "width", "height", "margin", "rate"], 5)

    def envious(fields):
        foreign = ["%s.%s" % (other, a) for a in attrs]
        while True:
            names = list(foreign)
            body = []
            for _ in range(rng.randint(1, 3)):
                t = rng.choice(NOUNS)
                body.append("        %s = %s" % (t, g.expr(names, 2)))
                names.append(t)
            body.append("        return %s + self.%s" % (g.expr(names, 2), rng.choice(fields)))
            text = "\n".join(body)
            if text.count(other + ".") >= 4 and text.count("self.") <= 1:
                break
        head = "    def %s_%s(self, %s):" % (rng.choice(["compute", "settle", "measure"]), rng.choice(NOUNS), other)
        return [head] + body

    lines = g.klass(rng.randint(1, 3), extra=envious)
    start = next(i for i, l in enumerate(lines) if ", %s):" % other in l)
    end = next(i for i in range(start, len(lines)) if lines[i].startswith("        return"))
    return Piece(lines, [("FeatureEnvy", None, start, end)])


def clone_pair(g, pair, long):
    """Two copies of one function differing only in names and literals."""
    rng = g.rng
    if long:
        n = rng.randint(6, 9)
        shape = [(rng.choice(["-", "*", "//"]), rng.choice(["-", "*", "//"]), rng.randint(1, 2)) for _ in range(n)]

        def render(names):
            lines = ["def %s(%s, %s):" % (names["f"], names["a"], names["b"])]
            vars_ = [names["a"], names["b"]]
            for i, (o1, o2, arity) in enumerate(shape):
                v = "%s%d" % (names["v"], i)
                rhs = "%s %s %s" % (rng.choice(vars_), o1, rng.randint(2, 90))
                if arity == 2:
                    rhs = "%s(%s) %s %s" % (names["h"], rhs, o2, rng.choice(vars_))
                lines.append("    %s = %s" % (v, rhs))
                vars_.append(v)
            lines.append("    return %s" % vars_[-1])
            return lines
    else:
        op = rng.choice(CMP)
        tail = rng.choice(["%s[%s] * %d", "%s[%s] - %d", "%s[%s] // %d"])
        extra = rng.random() < 0.5

        def render(names):
            a, b, i, acc = names["a"], names["b"], names["i"], names["acc"]
            lines = ["def %s(%s, %s):" % (names["f"], a, b), "    %s = []" % acc,
                     "    for %s in range(len(%s)):" % (i, a),
                     "        if %s[%s] %s %s:" % (a, i, op, b),
                     "            %s.append(%s)" % (acc, tail % (a, i, rng.randint(2, 9)))]
            if extra:
                lines.append("            %s += 1" % b)
            lines.append("    return %s" % acc)
            return lines

    copies = []
    for _ in range(2):
        names = {"f": "%s_%s" % (rng.choice(VERBS), rng.choice(NOUNS)), "a": g.name(), "b": g.name() + "_lim",
                 "i": rng.choice(["i", "j", "idx"]), "acc": rng.choice(["picked", "kept", "chosen", "hits"]),
                 "v": rng.choice(["t", "u", "w"]), "h": rng.choice(["norm", "halve", "lerp"])}
        lines = render(names)
        copies.append(lines)
    first = Piece(copies[0], [("DuplicatedCode", None, 0, len(copies[0]) - 1)], tag="clone%d" % pair)
    second = Piece(copies[1], [], tag="clone%d" % pair)
    return first, second


# ---- assembly ----------------------------------------------------------------------


class Windows:
    def __init__(self):
        self.seen = {}

    def check(self, text, pieces_at, commit):
        """`pieces_at(line)` -> tag. Returns False on an unplanned repeat."""
        toks = normalized(text)
        local = {}
        for p in range(len(toks) - WINDOW + 1):
            key = tuple(t for t, _ in toks[p:p + WINDOW])
            tags = {pieces_at(l) for _, l in toks[p:p + WINDOW]}
            tag = tags.pop() if len(tags) == 1 else None
            for owner in (self.seen.get(key), local.get(key)):
                if owner is None:
                    continue
                otag, opos = owner
                if otag is not None and otag == tag and otag.startswith("clone"):
                    continue
                if owner is local.get(key) and p - opos < WINDOW:
                    continue
                return False
            local.setdefault(key, (tag, p))
        if commit:
            self.seen.update(local)
        return True


def render(header, pieces):
    lines = list(header)
    spans = []
    for piece in pieces:
        lines += ["", ""]
        spans.append((len(lines) + 1, len(lines) + len(piece.lines), piece))
        lines += piece.lines
    return "\n".join(lines) + "\n", spans


def size_class(loc):
    return "small" if loc < 150 else "medium" if loc < 350 else "large"


def build_corpus(out, seed=2024, units=40):
    rng = random.Random(seed)
    g = Gen(rng)
    seeded = []
    seeded += [("long", "strong")] * 8 + [("long", "weak48")] * 5 + [("long", "weak32")] + [("long", "table")] * 8
    seeded += [("sql", "strong")] * 6 + [("sql", "weak")] * 3 + [("sql", "safe")] * 4
    seeded += [("cmd", "strong")] * 4 + [("cmd", "weak")] * 2 + [("cmd", "safe")] * 3
    seeded += [("xss", "strong")] * 4 + [("xss", "weak")] * 2 + [("xss", "safe")] * 3
    seeded += [("secret", "name")] * 7 + [("secret", "entropy")] * 3 + [("secret", "digest")] * 5
    seeded += [("god", "")] * 4 + [("data", "")] * 5 + [("envy", "")] * 5
    rng.shuffle(seeded)
    clones = [("clone", "short")] * 4 + [("clone", "long")] * 3

    names = sorted({"m%02d_%s.py" % (i, rng.choice(NOUNS)) for i in range(units)})
    assert len(names) == units
    plan = {n: [] for n in names}
    for i, s in enumerate(seeded):
        plan[names[(i * 7) % (units - 4)]].append(s)  # last four units stay unlabelled
    for k, (_, kind) in enumerate(clones):
        a = rng.randrange(0, units - 5)
        b = rng.randrange(a + 1, units)
        plan[names[a]].append(("clone-first", k))
        plan[names[b]].append(("clone-second", k))

    windows = Windows()
    pairs = []
    for k, (_, kind) in enumerate(clones):
        for _ in range(200):
            pa, pb = clone_pair(g, k, kind == "long")
            saved = dict(windows.seen)
            if all(windows.check("\n".join(p.lines) + "\n", lambda l: pa.tag, commit=True) for p in (pa, pb)):
                pairs.append((pa, pb))
                break
            windows.seen = saved
        else:
            raise RuntimeError("clone pair %d keeps colliding" % k)

    makers = {
        ("long", "strong"): lambda: long_strong(g), ("long", "weak48"): lambda: long_weak(g, rng.randint(46, 52)),
        ("long", "weak32"): lambda: long_weak(g, 33), ("long", "table"): lambda: constant_table(g),
        ("god", ""): lambda: god_class(g), ("data", ""): lambda: data_class(g), ("envy", ""): lambda: envy_class(g),
    }
    for kind in ["strong", "weak", "safe"]:
        makers[("sql", kind)] = (lambda k: lambda: sql_case(g, k))(kind)
        makers[("cmd", kind)] = (lambda k: lambda: cmd_case(g, k))(kind)
        makers[("xss", kind)] = (lambda k: lambda: xss_case(g, k))(kind)
    for kind in ["name", "entropy", "digest"]:
        makers[("secret", kind)] = (lambda k: lambda: secret_case(g, k))(kind)

    manifest = {"version": 1, "units": []}
    out.mkdir(parents=True, exist_ok=True)
    header = ["import os", "import shlex", "import subprocess"]
    for name in names:
        target = rng.randint(110, 420)
        for attempt in range(400):
            pieces = []
            for item in plan[name]:
                if item[0] == "clone-first":
                    pieces.append(pairs[item[1]][0])
                elif item[0] == "clone-second":
                    pieces.append(pairs[item[1]][1])
                else:
                    pieces.append(makers[item]())
            loc = sum(len(p.lines) for p in pieces)
            while loc < target:
                p = Piece(g.function() if rng.random() < 0.6 else g.klass(rng.randint(2, 6)))
                pieces.append(p)
                loc += len(p.lines)
            rng.shuffle(pieces)
            for i, p in enumerate(pieces):
                if p.tag is None:
                    p.tag = "%s#%d" % (name, i)
            text, spans = render(header, pieces)

            def tag_at(line, spans=spans):
                for a, b, p in spans:
                    if a <= line <= b:
                        return p.tag
                return None

            if windows.check(text, tag_at, commit=True):
                break
        else:
            raise RuntimeError("could not place %s" % name)
        (out / name).write_text(text)
        labels = []
        for a, _, p in spans:
            for cat, cwe, first, last in p.labels:
                label = {"category": cat}
                if cwe:
                    label["cwe"] = cwe
                label["span"] = {"startLine": a + first, "endLine": a + last}
                labels.append(label)
        code = sum(1 for l in text.splitlines() if l.strip())
        manifest["units"].append({"path": name, "language": "python-subset", "sizeClass": size_class(code),
                                  "labels": labels})
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


# ---- repair and risk sets ------------------------------------------------------------


def extractable_long(rng, fname, returns_inside=False):
    """Two loops whose branch bodies keep every simple run below five
    statements outside the loops; extracting either loop body clears the
    finding, extracting a single branch does not."""
    v = ["acc", "hits", "spill", "worst"]
    a, b = rng.sample(NOUNS, 2)
    prologue = ["    acc = %d" % rng.randint(0, 9), "    hits = 0", "    spill = []",
                rng.choice(["    worst = cutoff", "    worst = cutoff * %d" % rng.randint(2, 5), "    worst = halve(cutoff)"])]
    rng.shuffle(prologue)
    lines = ["def %s(%ss, %ss, cutoff):" % (fname, a, b)] + prologue

    def branch(ind, src, k):
        pad = "    " * ind
        ops = [
            "%sacc += %s * %d" % (pad, src, rng.randint(2, 9)),
            "%shits += 1" % pad,
            "%sspill.append(%s - cutoff)" % (pad, src),
            "%sworst = max(worst, %s)" % (pad, src),
            "%sacc -= %s // %d" % (pad, src, rng.randint(2, 9)),
            "%sspill.append(halve(%s))" % (pad, src),
            "%sworst = min(worst, %s + %d)" % (pad, src, rng.randint(1, 40)),
        ]
        rng.shuffle(ops)
        return ops[:k]

    for loop, (src, seq) in enumerate([("x", a + "s"), ("y", b + "s")]):
        lines.append("    for %s in %s:" % (src, seq))
        lines.append("        if %s:" % rng.choice(["%s > cutoff * %d" % (src, loop + 2), "%s - cutoff > %d" % (src, loop + 3),
                                                   "halve(%s) >= cutoff" % src, "%s > worst" % src]))
        lines += branch(3, src, 5)
        if returns_inside:
            lines.append("            return %s" % src)
        lines.append("        elif %s:" % rng.choice(["%s %s %d" % (src, rng.choice(CMP), rng.randint(1, 20)),
                                                     "%s * %d < cutoff" % (src, rng.randint(2, 5)), "%s == worst" % src]))
        lines += branch(3, src, 5)
        lines.append("        else:")
        lines += branch(3, src, 2)
    epilogue = rng.choice([["    spread = worst - cutoff", "    rate = acc // max(hits, 1)", "    return [rate, spread, spill]"],
                           ["    rate = halve(acc) + hits", "    spread = min(worst, rate)", "    return (spread, spill)"],
                           ["    spill.append(worst)", "    rate = acc - hits * %d" % rng.randint(2, 9), "    return rate, spill"]])
    lines += epilogue
    return lines


def build_repair(out, seed=77):
    rng = random.Random(seed)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {"version": 1, "units": []}

    def emit(name, header, blocks):
        lines = list(header)
        labels = []
        for block, cat, cwe, rel in blocks:
            lines += ["", ""]
            start = len(lines) + 1
            lines += block
            label = {"category": cat, "span": {"startLine": start + rel[0], "endLine": start + rel[1]}}
            if cwe:
                label["cwe"] = cwe
            labels.append(label)
        (out / name).write_text("\n".join(lines) + "\n")
        manifest["units"].append({"path": name, "language": "python-subset", "sizeClass": "small", "labels": labels})

    verbs = rng.sample(VERBS, 8)
    windows = Windows()
    for i in range(8):
        fail = i >= 6
        for _ in range(400):
            block = extractable_long(rng, "%s_batch" % verbs[i], returns_inside=fail)
            if windows.check("\n".join(block) + "\n", lambda l: None, commit=True):
                break
        else:
            raise RuntimeError("repair fixture %d keeps colliding" % i)
        emit("long_%d.py" % i, ["from helpers import halve"], [(block, "LongMethod", None, (0, len(block) - 1))])

    secrets = [("DB_PASSWORD", "hunter2hunter"), ("smtp_passwd", "mail-relay-77"), ("API_KEY", "ak_live_0f9e8d7c6b"),
               ("session_secret", "sess-2b7e151628"), ("upload_token", "upl_44b1c9d0e2"),
               ("ADMIN_PASSWORD", "Winter2024!x")]
    blocks = []
    for i, (target, value) in enumerate(secrets):
        fn = ["def connect_%d():" % i, '    %s = "%s"' % (target, value), "    return open_link(%s)" % target]
        blocks.append((fn, "HardcodedSecret", 798, (1, 1)))
    emit("secrets.py", ["from links import open_link"], blocks[:3])
    emit("secrets_more.py", ["from links import open_link"], blocks[3:])

    shapes = [
        ['    q = "SELECT * FROM users WHERE name = \'" + name_input + "\'"', "    return conn.execute(q)"],
        ['    base = "SELECT id FROM orders WHERE region = \'"', "    q = base + region_input + \"'\"",
         "    return conn.execute(q)"],
        ['    return conn.execute("DELETE FROM carts WHERE owner = " + owner_input)'],
        ['    q = "UPDATE stock SET qty = " + qty_input + " WHERE sku = \'" + sku_input + "\'"',
         "    conn.execute(q)", "    return q"],
        ['    where = " WHERE tag = \'" + tag_input + "\'"', '    q = "SELECT * FROM notes" + where',
         "    return conn.execute(q)"],
        ["    return conn.execute(build_query(term_input))"],
    ]
    blocks = []
    for i, body in enumerate(shapes):
        params = sorted({w for line in body for w in line.replace("(", " ").replace(")", " ").split()
                         if w.endswith("_input")})
        fn = ["def query_%d(conn, %s):" % (i, ", ".join(params))] + body
        sink = next(j for j, l in enumerate(fn) if "execute" in l)
        blocks.append((fn, "SqlInjection", 89, (sink, sink)))
    emit("queries.py", ["from builders import build_query"], blocks[:3])
    emit("queries_more.py", ["from builders import build_query"], blocks[3:])
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


def build_risk(out, seed=5):
    rng = random.Random(seed)
    g = Gen(rng)
    out.mkdir(parents=True, exist_ok=True)
    a = ["from links import open_link", "", "",
         'DB_PASSWORD = "hunter2hunter"', "", "",
         "def find_user(conn, name_input):",
         '    q = "SELECT * FROM users WHERE name = \'" + name_input + "\'"',
         "    return conn.execute(q)", "", "",
         "def drop_cart(conn, owner_input):",
         '    return conn.execute("DELETE FROM carts WHERE owner = " + owner_input)']
    b = ["", "",
         'smtp_passwd = "mail-relay-77"', 'session_secret = "sess-2b7e151628"', "", "",
         "def notes_for(conn, tag_input):",
         '    q = "SELECT * FROM notes WHERE tag = \'" + tag_input + "\'"',
         "    return conn.execute(q)", "", "",
         "def orders_in(conn, region_input):",
         '    base = "SELECT id FROM orders WHERE region = \'"',
         "    q = base + region_input + \"'\"",
         "    return conn.execute(q)", "", "",
         "def show_comment(comment_input):",
         '    return render_html("<div>" + comment_input + "</div>")']
    c = g.klass(17, "LedgerManager")
    (out / "accounts.py").write_text("\n".join(a) + "\n")
    (out / "mailer.py").write_text("\n".join(b).lstrip("\n") + "\n")
    (out / "ledger.py").write_text("\n".join(c) + "\n")


def main(root):
    root = Path(root)
    build_corpus(root / "corpus")
    build_repair(root / "acceptance" / "repair")
    build_risk(root / "acceptance" / "risk")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
