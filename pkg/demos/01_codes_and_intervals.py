"""
Codes, codewords, and Boolean intervals
=======================================

A neural code records which groups of neurons fire together: each codeword
is a subset of {1, .., n}. This walkthrough builds a small code and looks
at its Boolean intervals, maximal codewords, and simplicial complex.
"""

from neurocode import Code, Interval, downward_closure
from neurocode.io import interval_text, word_text

###############################################################################
# Building a code
# ---------------
# Words can be given as neuron sets; internally they are bitmasks. The code
# below is {empty, 2, 3, 12, 13} on three neurons.

code = Code.from_neuron_sets(3, [(), (2,), (3,), (1, 2), (1, 3)])
print("words:", " ".join(word_text(w, 3) for w in code))

###############################################################################
# The complement code
# -------------------
# Everything the code misses. Complementation is an involution.

comp = code.complement
print("complement:", " ".join(word_text(w, 3) for w in comp))
assert comp.complement == code

###############################################################################
# Boolean intervals
# -----------------
# The interval [c, d] collects every word between c and d. An interval of
# the code is one whose members are all codewords; the maximal ones
# determine everything downstream.

iv = Interval(0b010, 0b011)  # [2, 12]
print("members of [2,12]:", " ".join(word_text(w, 3) for w in sorted(iv.members(3))))
print("contained in the code:", code.contains_interval(iv))

print("maximal intervals:",
      " ".join(interval_text(v, 3) for v in sorted(code.maximal_intervals)))

###############################################################################
# Maximal codewords and the code's complex
# ----------------------------------------
# The smallest simplicial complex containing the code has the maximal
# codewords as facets.

print("maximal codewords:",
      " ".join(word_text(w, 3) for w in sorted(code.maximal_codewords)))
print("complex facets:",
      " ".join(word_text(f, 3) for f in sorted(downward_closure(code).facets)))
