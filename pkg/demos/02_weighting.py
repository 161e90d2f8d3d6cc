"""
TF-IDF weights, with and without synonym resolution
===================================================

Builds a three-document corpus by hand, recomputes one weight on paper,
then shows what the synonym-aware scheme changes: a term missing from a
document can borrow the count of the first synonym that does occur, and
document frequency grows accordingly.

Run from the repository root:

    python3 demos/02_weighting.py
"""

import io
import math

from synsim import (
    Corpus,
    ProcessedDocument,
    SynonymTable,
    WeightingConfig,
    document_frequency,
    idf,
    load_synonym_table,
    resolve_count,
    tf,
    vectorize,
)

corpus = Corpus(
    [
        ProcessedDocument.from_terms("d1", ["oil", "oil", "price"]),
        ProcessedDocument.from_terms("d2", ["oil", "export"]),
        ProcessedDocument.from_terms("d3", ["price", "export", "export"]),
    ]
)

print("corpus:")
for doc in corpus:
    print(f"  {doc.id}: {dict(doc.counts)}")

# One weight on paper: 'oil' appears twice among d1's three tokens, and in
# two of the three documents.
d1 = corpus.document("d1")
print("\nweight of 'oil' in d1, step by step:")
print(f"  tf  = 2/3          = {tf(2, 3):.6f}")
print(f"  df  = {document_frequency(corpus, 'oil', 'traditional')}")
print(f"  idf = log2(3/2)    = {idf(corpus, 'oil'):.6f}")
print(f"  tf * idf           = {(2 / 3) * math.log2(3 / 2):.6f}")

vector = vectorize(d1, corpus, ("export", "oil", "price"), WeightingConfig())
print(f"  vectorize() agrees = {vector.get('oil'):.6f}")

# Now the synonym-aware variant. Declare 'oil' and 'petroleum' synonymous
# and add a document that only says 'petroleum'.
corpus2 = Corpus(
    [
        ProcessedDocument.from_terms("d1", ["oil", "oil", "price"]),
        ProcessedDocument.from_terms("d2", ["oil", "export"]),
        ProcessedDocument.from_terms("d3", ["price", "export", "export"]),
        ProcessedDocument.from_terms("d4", ["petroleum"]),
    ],
    synonym_table=load_synonym_table(io.StringIO("oil, petroleum\n")),
)
table = corpus2.synonym_table

print("\nresolve_count('oil', d4): the raw count is 0, so the synonym row")
print("is walked in order and the first member present supplies the count:")
resolved = resolve_count("oil", corpus2.document("d4"), table)
print(f"  count={resolved.count} via {resolved.matched_term!r}")

resolved = resolve_count("oil", corpus2.document("d1"), table)
print("resolve_count('oil', d1): a positive raw count short-circuits:")
print(f"  count={resolved.count} via {resolved.matched_term!r}")

print("\ndocument frequency of 'oil' (4 documents):")
df_trad = document_frequency(corpus2, "oil", "traditional")
df_mod = document_frequency(corpus2, "oil", "modified", table)
print(f"  traditional: {df_trad}  (d1, d2)")
print(f"  modified:    {df_mod}  (d1, d2, and d4 via 'petroleum')")
print(f"  idf drops from {idf(corpus2, 'oil'):.6f} "
      f"to {idf(corpus2, 'oil', 'modified', table=table):.6f}")

# The weight of 'oil' in d4 is zero traditionally but positive once the
# synonym supplies a count.
vocabulary = ("export", "oil", "petroleum", "price")
d4 = corpus2.document("d4")
trad = vectorize(d4, corpus2, vocabulary, WeightingConfig(mode="traditional"))
mod = vectorize(
    d4, corpus2, vocabulary, WeightingConfig(mode="modified", synonym_table=table)
)
print("\nweight of 'oil' in d4:")
print(f"  traditional: {trad.get('oil'):.6f}")
print(f"  modified:    {mod.get('oil'):.6f}")

# With an empty table the modified scheme degenerates to the traditional
# one, bit for bit.
empty = vectorize(
    d4,
    corpus2,
    vocabulary,
    WeightingConfig(mode="modified", synonym_table=SynonymTable.empty()),
)
print("\nempty synonym table: modified equals traditional exactly ->",
      empty.weights == trad.weights)
