#!/usr/bin/env python3
"""The symmetric determinantal pipeline, in exact rational arithmetic.

A symmetric 3x3 matrix of forms determines a cubic threefold with a marked
line; the discriminant of the induced conic bundle is a plane quintic, and
the upper 2x2 minor cuts a conic totally tangent to it.
"""

from pathlib import Path

from dptheta import detrep

DATA = Path(__file__).resolve().parent / "data"

fields = detrep.parse_data_block((DATA / "detrep_sample.txt").read_text())
data = detrep.data_from_block(fields)

f = detrep.discriminant_quintic(data)
t = detrep.contact_conic(data)
print(f"discriminant quintic:\n  {f}")
print(f"contact conic:\n  {t}")

report = detrep.total_tangency_check(f, t, seed=0)
print(f"tangency verdict: {report.verdict.value} (shear {report.shear})")

cubic = detrep.cubic_threefold(data)
assert detrep.extract_matrix(cubic) == data
print("\ncubic threefold round-trips through extract_matrix")

quartic, line = detrep.quartic_from_odd_theta(
    data.l11, data.q1, data.h)
print(f"\n2x2 variant: quartic {quartic}")
print(f"with marked bitangent {line} (F + Q^2 = L H exactly)")
