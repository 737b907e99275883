"""
Exact arithmetic in GF(2^n)
===========================

Build small Galois fields, poke at their arithmetic, and watch the two
characteristic-2 oddities that drive everything else in this package:
subtraction coincides with addition, and squaring is a bijection whose
inverse (the square root) is a single Frobenius power.
"""

from galois_arrow import elements, inv, make_field, sqrt_char2

# GF(8) with the shipped modulus x^3 + x + 1
f8 = make_field(2, 3)
print(f"field: {f8}")
print(f"modulus (low-to-high coefficients): {f8.modulus}")

x = f8.element(2)           # the class of x
x2 = f8.element(4)          # x^2
print(f"x * x^2      = {x * x2}     (x^3 reduces to x + 1, i.e. value 3)")
print(f"x + x        = {x + x}     (characteristic 2: everything is its own negative)")
print(f"inv(x)       = {inv(x)}     (check: x * inv(x) = {x * inv(x)})")
print(f"sqrt(x)      = {sqrt_char2(x)}     (check: squared back = {sqrt_char2(x) * sqrt_char2(x)})")

# the Frobenius map a -> a^2 is additive in characteristic 2
a, b = f8.element(3), f8.element(6)
print(f"(a+b)^2 = {(a + b) ** 2},  a^2 + b^2 = {a ** 2 + b ** 2}")

# element enumeration is canonical: 0, 1, then by packed value
print("GF(4) elements as coefficient vectors:",
      [e.coeffs for e in elements(make_field(2, 2))])

# a custom modulus gives a different (isomorphic) presentation of GF(8)
f8b = make_field(2, 3, (1, 0, 1, 1))     # x^3 + x^2 + 1
print(f"alternative GF(8): modulus {f8b.modulus}, distinct spec: {f8 != f8b}")

# odd characteristic works too (needed for the odd-order contrast checks)
f9 = make_field(3, 2, (1, 0, 1))         # x^2 + 1 over GF(3)
g = f9.element(5)
print(f"GF(9): 5 * inv(5) = {g * inv(g)}")
