"""Signatures and labels in F5.

Every element F5 produces carries a signature (which generator it came
from, and at what monomial multiple) and a vector of cofactors that
rebuilds it from the monic generators.  The vector is a checkable proof of
membership.
"""

from polyideal import Ideal, dot, f5, is_groebner_basis, parse_ideal_text, reduce_gb
from polyideal.f5 import koszul_syzygies, monoize

ring, polys = parse_ideal_text("ring Q [x,y,z] grevlex\nx*y - z\ny*z - x\nx*z - y\n")
ideal = Ideal(polys, ring)
inputs = [monoize(f) for f in ideal]
names = ideal.ring.variable_names

print("trivial syzygy signatures known up front:", koszul_syzygies(inputs))

trace = []
labeled = f5(ideal, trace=trace)
print(f"\n{len(labeled)} labeled elements")
for lp in labeled:
    index, mono = lp.signature
    sig = f"e{index}" if not any(mono) else f"{'*'.join(n + (f'^{e}' if e > 1 else '') for n, e in zip(names, mono) if e)}*e{index}"
    ok = dot(inputs, lp.vector) == lp.poly
    print(f"  {sig:10} {str(lp.poly):28} label ok: {ok}")

kinds = {}
for _, kind in trace:
    kinds[kind] = kinds.get(kind, 0) + 1
print("\nwhat happened to each signature processed:", kinds)

polys = [lp.poly for lp in labeled]
print("S-test:", is_groebner_basis(polys))
print("reduced:", [str(g) for g in reduce_gb(polys)])
