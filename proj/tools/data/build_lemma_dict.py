#!/usr/bin/env python3
"""Regenerate data/lemmas_en.tsv from the spacy-lookups-data wheel.

The English lookup table in that package is derived from WordNet 3.0
(see data/LICENSE-WordNet.txt). The output is a POS-free surface->lemma map:

  * only lowercase ASCII-alphabetic keys and values are kept
  * every WordNet single-word lemma (and every bundled stopword that is not
    itself an inflected form) gets an identity entry so the suffix-rule
    fallback never fires on known base words
  * a short override list fixes readings where the table picks a rare sense
  * chains (a -> b -> c) are collapsed so every lemma is a fixpoint

usage: build_lemma_dict.py path/to/spacy_lookups_data-*.whl data/stopwords_en.txt > data/lemmas_en.tsv
"""

import gzip
import json
import re
import sys
import zipfile

VERSION = "lexicov-lemma-en-1"
ALPHA = re.compile(r"[a-z]+")

# surface -> lemma corrections applied after loading the lookup table
OVERRIDES = {
    "as": "as",
    "does": "do",
    "dying": "die",
    "atlas": "atlas",
    "news": "news",
    "this": "this",
    "was": "be",
    "us": "us",
    "less": "less",
    "lest": "lest",
    "thus": "thus",
    "towards": "towards",
    "always": "always",
    "perhaps": "perhaps",
    "sometimes": "sometimes",
    "besides": "besides",
    "whereas": "whereas",
    "its": "its",
    "his": "his",
    "hers": "hers",
    "ours": "ours",
    "yours": "yours",
    "theirs": "theirs",
    "during": "during",
    "nothing": "nothing",
    "something": "something",
    "anything": "anything",
    "everything": "everything",
    "morning": "morning",
    "evening": "evening",
    "better": "good",
    "best": "good",
    "well": "well",
    "data": "data",
    "media": "media",
    "felt": "feel",
    "found": "find",
    "ground": "ground",
    "bound": "bind",
    "wound": "wound",
    "lay": "lie",
    "saw": "see",
    "left": "leave",
    "crew": "crew",
    "crews": "crew",
    "matter": "matter",
    "matters": "matter",
    "mattered": "matter",
    "number": "number",
    "numbers": "number",
    "numbered": "number",
    "putting": "put",
    "taxes": "tax",
    "masses": "mass",
    "swinging": "swing",
    "worse": "bad",
    "worst": "bad",
    "tis": "tis",
    "willing": "willing",
    "rose": "rise",
}


def load(wheel, name):
    with zipfile.ZipFile(wheel) as z:
        return json.loads(gzip.decompress(z.read(f"spacy_lookups_data/data/{name}")))


def main():
    wheel, stop_path = sys.argv[1], sys.argv[2]
    lookup = load(wheel, "en_lemma_lookup.json.gz")
    index = load(wheel, "en_lemma_index.json.gz")
    stops = [w.strip() for w in open(stop_path, encoding="utf-8")
             if w.strip() and not w.startswith("#")]

    table = {}
    for surface, lemma in lookup.items():
        s, l = surface.lower(), lemma.lower()
        if not (ALPHA.fullmatch(s) and ALPHA.fullmatch(l)):
            continue
        # a lowercase source key wins over a case-folded one
        if s in table and surface != s:
            continue
        table[s] = l
    table.update(OVERRIDES)

    def resolve(word):
        seen = []
        while word in table and table[word] != word and word not in seen:
            seen.append(word)
            word = table[word]
        if word in seen:  # cycle: smallest member becomes the fixpoint
            return min(seen)
        return word

    resolved = {s: resolve(s) for s in table}
    # every resolved value is a chain terminal (or a cycle's chosen member)
    for lemma in set(resolved.values()):
        resolved[lemma] = lemma

    identities = set()
    for words in index.values():
        identities.update(w for w in words if ALPHA.fullmatch(w))
    identities.update(w for w in stops if ALPHA.fullmatch(w))
    for w in identities:
        resolved.setdefault(w, w)

    for s, l in resolved.items():
        assert resolved[l] == l, (s, l, resolved[l])

    out = sys.stdout
    out.write(f"# version: {VERSION}\n")
    out.write("# surface<TAB>lemma; derived from WordNet 3.0 via spacy-lookups-data\n")
    out.write("# see LICENSE-WordNet.txt in this directory\n")
    for s in sorted(resolved):
        out.write(f"{s}\t{resolved[s]}\n")


if __name__ == "__main__":
    main()
