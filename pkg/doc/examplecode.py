#!/usr/bin/env python

from fractions import Fraction

from poissonhopf import *
from poissonhopf import cohomology

#Laurent polynomials over Q
ring = GeneratorSet(["g", "x"], invertible=[True, False])
g, x = ring.gens()
print((x + g) ** 2)
#g^2 + 2*g*x + x^2
print(Fraction(1, 2) * g ** -1 * x)
#1/2*g^-1*x

#A Poisson bracket given on generators, {x,g} = g*x
A = PoissonAlgebra(ring, {("x", "g"): g * x})
print(A(x ** 2, g))
#2*g*x^2
print(check_jacobi(A).passed)
#True

#Hopf data on generators; eps and S are derived when omitted
B = HopfData(A, delta={"x": tensor(x, ring.one()) + tensor(g, x)})
print(B.antipode_of(x))
#-g^-1*x
print(check_hopf_axioms(B).passed, check_poisson_hopf(B).passed)
#True True

#The catalog holds worked examples, with parameters
typea = catalog_get("typea", lam=2)
print(typea.hopf.delta_of(typea.ring.gen("x")))
#g@x + x@1

#A bracket that is not compatible with the coproduct
for result in check_poisson_hopf(catalog_get("group").hopf).failures()[:1]:
    print(result.line())
#CHECK poisson-hopf[...]: FAIL residual=...

#The enveloping algebra B^e in PBW normal form
U = UEA(catalog_get("typea").hopf)
print(parse_word(U, "h(x)*m(g)"))
#g*h(x) + g*x
print(parse_word(U, "h(x)*h(g)"))
#h(g)*h(x) + x*h(g) + g*h(x)

#The Lie algebra a = m/m^2 and the cobracket of H(B) for a connected B
print(lie_on_a(catalog_get("typea").hopf).table())
#['[y2,y1] = y2']
for line in cobracket(catalog_get("gk3").hopf).lines():
    print(line)
#d'(y1) = 0
#d'(y2) = 0
#d'(y3) = 2*(y1@y2 - y2@y1)

#Poisson cohomology of the symplectic plane, weights 0..4
table = cohomology.hp_table(catalog_get("symplectic").algebra, 2, 4)
for line in cohomology.format_hp_table(table):
    print(line)
#HP^0: 1 0 0 0 0
#HP^1: 0 0 0 0 0
#HP^2: 0 0 0 0 0

#Every check group at once, as `poissonhopf check all` runs it
report = run_all(catalog_get("gk3"), degree=2)
print(report.passed)
#True
