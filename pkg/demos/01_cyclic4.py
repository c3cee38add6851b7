"""Cyclic-4 from start to finish.

Parse the ideal, compute a Groebner basis, reduce it, check it, and ask
whether a few polynomials are members (with a certificate when they are).
"""

from polyideal import (
    Ideal,
    buchberger,
    dot,
    ideal_membership,
    is_groebner_basis,
    parse_ideal_text,
    reduce_gb,
)

TEXT = """\
ring Q [w,x,y,z] grevlex
w + x + y + z
w*x + x*y + y*z + z*w
w*x*y + x*y*z + y*z*w + z*w*x
w*x*y*z - 1
"""

ring, polys = parse_ideal_text(TEXT)
ideal = Ideal(polys, ring)
print("generators:")
for g in ideal:
    print("  ", g)

raw = buchberger(ideal)
print(f"\nbuchberger returned {len(raw)} elements")
gb = reduce_gb(raw)
print(f"the reduced basis has {len(gb)}:")
for g in gb:
    print("  ", g)
print("passes the S-test:", is_groebner_basis(gb))

# membership: a combination of generators is in, a stray variable is not
w, x, y, z = ring.gens()
gens = ideal.generators
f = (x - y) * gens[0] + z**2 * gens[3]
ok, cofactors = ideal_membership(f, ideal)
print("\nf =", f)
print("member:", ok)
print("cofactors re-expand to f:", dot(gens, cofactors) == f)
print("is w a member?", ideal_membership(w, ideal)[0])
