"""
Surveying every code on a few neurons
=====================================

The survey enumerates every valid code on n neurons (there are
2**(2**n) - 2 of them), cross-checks all three deciders per property on
each, and tabulates canonical-form statistics. One empirical question the
table bears on: how large can the nonmonomial part of the canonical form
grow relative to the number of maximal codewords?
"""

from collections import Counter

from neurocode import summarize, survey

###############################################################################
# Survey of all 254 codes on three neurons
# ----------------------------------------

rows = list(survey(3))
summary = summarize(rows)

print(f"codes: {summary.codes}")
print(f"intersection-complete: {summary.ic_count}")
print(f"max-intersection-complete: {summary.mic_count}")

###############################################################################
# Distribution of canonical-form sizes
# ------------------------------------

sizes = Counter(row.cf_size for row in rows)
print("canonical form size distribution:")
for size in sorted(sizes):
    print(f"  |CF| = {size}: {sizes[size]} codes")

###############################################################################
# Nonmonomial canonical-form elements per maximal-codeword count
# --------------------------------------------------------------
# The survey keeps the maximum observed value per bucket.

print("max nonmonomial CF size by number of maximal codewords:")
for max_words, value in summary.max_cf_nonmonomials.items():
    print(f"  {max_words} maximal codeword(s): {value}")

###############################################################################
# The same survey is available from the command line:
#
#   neurocode survey --n 3
#   neurocode survey --n 4 --json
#
# n = 4 visits all 65534 codes and takes a few seconds; larger n is refused
# with a cost estimate.
