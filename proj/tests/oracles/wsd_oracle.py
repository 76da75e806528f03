#!/usr/bin/env python3
"""Independent reference computations used to freeze expected values in the
C++ test suites. Nothing here shares code with the library.

Usage: wsd_oracle.py [fleuve|pecheur|lin|seq|all]
"""
import difflib
import itertools
import json
import math
import re
import sys
from collections import Counter, defaultdict
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
STOP = set((ROOT / "data" / "stopwords_fr.txt").read_text(encoding="utf-8").split())
RELATIONS = ["gloss", "hypernym", "hyponym", "meronym", "holonym",
             "attribute", "similar_to", "also_see"]


def tokens(text):
    out = []
    for t in re.findall(r"[^\W_]+", text.lower()):
        if len(t) < 2 or t in STOP:
            continue
        out.append(t)
    return out


def load_net(path):
    net = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            s = json.loads(line)
            net[s["id"]] = s
    return net


def senses(net, lemma, pos):
    return sorted(i for i, s in net.items() if s["pos"] == pos and lemma in s["lemmas"])


def definition(net, sid, fallback=True):
    s = net[sid]
    toks = []
    for g in s["glosses"]:
        toks += tokens(g)
    if not s["glosses"] and fallback:
        for syn in s["synonyms"]:
            toks += tokens(syn)
    return toks


def seq_overlap(a, b):
    # difflib picks the longest block, earliest in a, then earliest in b.
    a, b = (a, b) if a <= b else (b, a)
    a = list(a)
    b = list(b)
    total = 0
    serial = itertools.count()
    while True:
        m = difflib.SequenceMatcher(None, a, b, autojunk=False).find_longest_match(0, len(a), 0, len(b))
        if m.size == 0:
            return total
        total += m.size * m.size
        for i in range(m.size):
            a[m.a + i] = ("gapA", next(serial))
            b[m.b + i] = ("gapB", next(serial))


def related(net, sid, rel):
    if rel == "gloss":
        return [sid]
    return sorted(t for t in net[sid]["relations"].get(rel, []) if t in net)


def lesk_ext(net, s1, s2, pairs=None):
    pairs = pairs or [(r1, r2) for r1 in RELATIONS for r2 in RELATIONS]
    total = 0
    for r1, r2 in pairs:
        d1 = [t for x in related(net, s1, r1) for t in definition(net, x)]
        d2 = [t for x in related(net, s2, r2) for t in definition(net, x)]
        total += seq_overlap(d1, d2)
    return total


def lesk_base(net, s1, s2):
    return sum((Counter(definition(net, s1)) & Counter(definition(net, s2))).values())


# --- distributional -------------------------------------------------------

def load_index(triples_path, lexicon_path):
    lex = dict(l.split("\t") for l in Path(lexicon_path).read_text(encoding="utf-8").splitlines() if l)
    feats = defaultdict(set)
    for line in Path(triples_path).read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        h, r, m, c = line.split("\t")
        if h in lex:
            feats[(h, lex[h])].add((r, m, "head"))
        if m in lex:
            feats[(m, lex[m])].add((r, h, "mod"))
    return feats


def lin(feats, w1, w2, pos):
    vocab = [w for (w, p) in feats if p == pos]
    total = len(vocab)
    holders = Counter()
    for (w, p), fs in feats.items():
        if p == pos:
            for f in fs:
                holders[f] += 1
    ic = lambda f: -math.log(holders[f] / total)
    f1, f2 = feats[(w1, pos)], feats[(w2, pos)]
    den = sum(map(ic, f1)) + sum(map(ic, f2))
    if den == 0:
        return 0.0
    return 2 * sum(map(ic, f1 & f2)) / den


def neighbors(feats, target, pos, candidates, k):
    scored = sorted(((lin(feats, target, c, pos), c) for c in candidates if (c, pos) in feats),
                    key=lambda x: (-x[0], x[1]))
    return scored[:k]


def wsd_scores(net, target, pos, neigh_lemmas, scorer):
    out = {}
    for s in senses(net, target, pos):
        total = 0
        for n in neigh_lemmas:
            ns = senses(net, n, pos)
            total += max((scorer(net, s, x) for x in ns), default=0)
        out[s] = total
    return out


def pick(net, scores):
    return max(scores, key=lambda s: (scores[s], net[s]["degree"], [-ord(c) for c in s]))


def paragraph_lemmas(path, paragraph, target):
    """Content lemmas of one paragraph, first occurrence of `target` left out."""
    out, para, skipped = [], 0, False
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip() == "#PARA":
            para += 1
            continue
        cols = line.split("\t")
        if len(cols) != 3 or para != paragraph or cols[2] not in ("noun", "verb", "adj", "adv"):
            continue
        if cols[1] == target and not skipped:
            skipped = True
            continue
        out.append(cols[1])
    return out


def fleuve():
    d = ROOT / "tests" / "data" / "fleuve"
    net = load_net(d / "network.jsonl")
    feats = load_index(d / "triples.tsv", d / "lexicon.tsv")
    for ctx, cands in [("river", ["rivière", "affluent", "eau", "pont", "regard", "étoile"]),
                       ("sea", ["mer", "eau", "océan", "ciel", "regard", "bonheur"])]:
        ranked = neighbors(feats, "fleuve", "noun", cands, len(cands))
        print(ctx, "ranked:", [(c, round(s, 6)) for s, c in ranked])
        top = [c for _, c in ranked[:3]]
        for name, fn in [("ext", lesk_ext), ("base", lesk_base)]:
            sc = wsd_scores(net, "fleuve", "noun", top, fn)
            print(" ", name, sc, "->", pick(net, sc))
            for s in sc:
                for n in top:
                    print("    ", s, n, {x: fn(net, s, x) for x in senses(net, n, "noun")})
        ctx_bag = Counter(tokens(" ".join(paragraph_lemmas(d / f"{ctx}.tsv", 0, "fleuve"))))
        var = {s: sum((ctx_bag & Counter(definition(net, s))).values()) for s in senses(net, "fleuve", "noun")}
        print("  variant", var)


def pecheur():
    net = load_net(ROOT / "tests" / "data" / "pecheur" / "network.jsonl")
    for fn in (lesk_ext, lesk_base):
        sc = wsd_scores(net, "pêcheur", "noun", ["saumon"], fn)
        print(fn.__name__, sc, "->", pick(net, sc))


def lin_example():
    feats = {("a", "n"): {"f1", "f2"}, ("b", "n"): {"f1", "f3"},
             ("c", "n"): {"f4"}, ("d", "n"): {"f5"}}
    print("lin(a,b) =", repr(lin(feats, "a", "b", "n")))
    print("ic 38/22168 =", -math.log(38 / 22168), " ic 582/22168 =", -math.log(582 / 22168))


def seq_examples():
    print(seq_overlap(list("abc"), list("abc")),
          seq_overlap(list("axb"), list("ayb")),
          seq_overlap(list("abcd"), list("bcxa")))


if __name__ == "__main__":
    what = sys.argv[1] if len(sys.argv) > 1 else "all"
    for name, fn in [("seq", seq_examples), ("lin", lin_example), ("fleuve", fleuve), ("pecheur", pecheur)]:
        if what in (name, "all"):
            print(f"== {name}")
            fn()
