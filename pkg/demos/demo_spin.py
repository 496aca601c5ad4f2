#!/usr/bin/env python3
"""Spin structures on stable curves, following the dual-graph calculus.

An irreducible genus-3 curve acquiring up to three nodes spreads its 64
theta characteristics over supports with multiplicities; the total degree
2^{2g} is conserved.
"""

from dptheta import spin

print("irreducible genus-3 curve, n nodes, k of them resolved:")
print("  n  k  count  mult  odd  even")
for n in range(4):
    for row in spin.spin_table_irreducible(3, n):
        print(f"  {n}  {row.resolved}  {row.count:5d}  {row.multiplicity:4d}"
              f"  {row.odd:3d}  {row.even:4d}")

print("\na genus-2 vertex with one loop (genus 3, one non-separating node):")
graph = spin.DualGraph([2], [(0, 0)])
for support in spin.spin_scheme(graph):
    label = "loop kept" if support.delta else "loop resolved"
    print(f"  {label:14s} count {support.count:2d}  "
          f"multiplicity {support.multiplicity}")
total = sum(s.count * s.multiplicity for s in spin.spin_scheme(graph))
print(f"  total degree {total} = 4^{graph.genus}")
