#!/usr/bin/env python3
"""Walk through the Picard-lattice combinatorics of Del Pezzo surfaces.

Degree 3 is the cubic surface (27 lines, Weyl group W(E6)); degree 2 is the
double plane branched over a quartic (56 lines over 28 bitangents, W(E7),
Geiser involution).
"""

from dptheta import lattice as lt
from dptheta.lattice import ClassKind

for degree in (3, 2):
    lat = lt.make_lattice(degree)
    print(f"--- degree {degree} Del Pezzo (rank {lat.rank} lattice) ---")
    for kind in ClassKind:
        classes = lt.enumerate_classes(lat, kind)
        print(f"  {kind.name.lower():12s} {len(classes)}")
    print(f"  Weyl group order {lt.weyl_order(lat)}")

lat3 = lt.make_lattice(3)
orbits = lt.double_six_orbits(lat3)
print(f"\ncubic surface: {len(orbits)} double sixes; the first one pairs")
first = sorted(orbits[0])
print(f"  {lt.format_class(first[0])} with {lt.format_class(first[1])}")

lat2 = lt.make_lattice(2)
e1 = lt.class_E(lat2, 1)
print(f"\nGeiser image of {lt.format_class(e1)} is "
      f"{lt.format_class(lt.geiser(lat2, e1))}")
print("each of the 28 bitangents of the branch quartic carries such a pair")
