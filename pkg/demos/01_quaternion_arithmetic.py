"""A tour of the quaternion scalar type.

Quaternions q = r0 + r1 i + r2 j + r3 k multiply by the Hamilton rules
i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j, and the reversed products
pick up a sign.  Everything downstream (vectors, matrices, frames)
inherits its non-commutativity from this table.
"""

from quatframes import Quaternion
from quatframes.quaternion import I, J, K, ONE

print("unit table:")
for name, a in (("i", I), ("j", J), ("k", K)):
    for other, b in (("i", I), ("j", J), ("k", K)):
        print(f"  {name}*{other} = {a * b}")

p = Quaternion(1, 1, 0, 0)
q = Quaternion(1, 0, 1, 0)
print()
print(f"p = {p}, q = {q}")
print(f"p*q = {p * q}")
print(f"q*p = {q * p}   (order matters)")

print()
print("conjugation reverses products:")
print(f"  conj(p*q)        = {(p * q).conjugate()}")
print(f"  conj(q)*conj(p)  = {q.conjugate() * p.conjugate()}")

print()
print("the modulus is multiplicative and gives inverses:")
r = Quaternion(1, 1, 1, 1)
print(f"  |p| |q| = {abs(p) * abs(q):.6f} and |p*q| = {abs(p * q):.6f}")
print(f"  r = {r}, r^-1 = {r.inverse()}")
print(f"  r * r^-1 = {r * r.inverse()}")

print()
print("real scalars commute with everything:")
print(f"  2*r = {2.0 * r} = r*2 = {r * 2.0}")
