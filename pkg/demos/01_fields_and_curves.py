"""Fields and curves: exact GF(p^m) arithmetic and the point group.

Walks through the two workhorse fields, GF(16) with theta^4 = theta + 1
and GF(25) with theta^2 = theta - 2, then enumerates two curves and
prints their group structures.
"""

from ellcode import Curve, FieldSpec, feasible_orders

f16 = FieldSpec.from_string("p=2,m=4,mod=1,1,0,0,1")
theta = f16.generator()
print(f"GF(16): generator enc {theta.enc}, theta^4 = {(theta ** 4).enc} "
      f"(= theta + 1 -> enc 3)")
print(f"        theta * theta^3 = enc {(theta * theta ** 3).enc}")
print(f"        sqrt is total in char 2: sqrt(enc 9) = enc {f16.element(9).sqrt().enc}")

f25 = FieldSpec.from_string("p=5,m=2,mod=2,4,1")
print(f"GF(25): generator enc {f25.generator().enc} of order 24")
print(f"        -1 is a square: sqrt(enc {f25.neg_enc(1)}) = "
      f"enc {f25.element(f25.neg_enc(1)).sqrt().enc}")

print()
e16 = Curve.from_string(f16, "1,8,0,0,9")
st = e16.group_structure()
print(f"curve {e16}: {e16.order()} points, group Z/{st.d1} x Z/{st.d2}")
odd = [p for p in e16.points() if not p.is_infinity and e16.point_order(p) % 2]
print(f"  odd-order points: {len(odd)} (five inverse pairs, the raw material"
      " of the even-characteristic construction)")

e25 = Curve.from_string(f25, "0,0,0,0,1")
st = e25.group_structure()
print(f"curve {e25}: {e25.order()} points, group Z/{st.d1} x Z/{st.d2}")
print(f"  full 2-torsion: {e25.torsion_points(2)}")
print(f"  full 3-torsion: {len(e25.torsion_points(3))} points")

print()
print("admissible point counts over GF(4) (order, trace, case):")
for row in feasible_orders(4):
    print("  ", row)
