#!/usr/bin/env python3
"""The F2 algebra of genus-3 theta characteristics, and the genus-6 count
of totally tangent conic pairs."""

import random
from collections import Counter

from dptheta import theta_f2 as tf

print(f"classes: {len(tf.odd_classes())} odd, {len(tf.even_classes())} even")

sets = tf.enumerate_aronhold()
fibers = Counter(tf.even_theta_of_aronhold(s) for s in sets)
print(f"Aronhold sets: {len(sets)}, i.e. "
      f"{set(fibers.values()).pop()} per even theta characteristic")
first = sets[0]
print("  e.g. " + " ".join(str(t) for t in first)
      + f" -> {tf.even_theta_of_aronhold(first)}")

print("\nzero counts of quadratic forms (2^{2g-1} +/- 2^{g-1}):")
for g in (1, 2, 3):
    even = tf.count_zeros(tf.make_space(g, 0))
    odd = tf.count_zeros(tf.make_space(g, 1))
    print(f"  g={g}: even {even}, odd {odd}")

intermediate, z, pairs = tf.count_conic_pairs()
print(f"\ngenus-6 conic-pair pipeline: intermediate {intermediate}, "
      f"|Z| = {z}, pairs = {pairs}")
for seed in (1, 2, 3):
    assert tf.count_conic_pairs(random.Random(seed)) == (intermediate, z, pairs)
print("(invariant under random admissible choices)")
