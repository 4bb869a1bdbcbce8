#!/usr/bin/env python

from fractions import Fraction

from poissonhopf import *
from poissonhopf import cohomology, quotient

##################################################################
# WARNING! DO NOT EDIT THIS FILE!  THIS FILE CONTAINS TEST CASES
# WORKED OUT BY HAND AND CROSS-CHECKED WITH OTHER COMPUTER ALGEBRA
# SOFTWARE. IT IS A STRONG TEST OF THE poissonhopf FRAMEWORK. ONLY
# EDIT IF YOU KNOW WHAT YOU ARE DOING!
##################################################################

def validate(output, expected):
    if output != expected:
        raise Exception("Failed test: got " + str(output) + ", expected " + str(expected))

##################################################################
# Polynomials
##################################################################
ring = GeneratorSet(["g", "x"], invertible=[True, False])
g, x = ring.gens()
validate(str((x + g) ** 2), "g^2 + 2*g*x + x^2")
validate(g * g ** -1, 1)
validate((x ** 3).derivative(1), 3 * x ** 2)
validate(str(Fraction(1, 2) * g ** -1 * x), "1/2*g^-1*x")

##################################################################
# Poisson algebras
##################################################################
#Symplectic plane
plane = catalog_get("symplectic")
x, y = plane.ring.gens()
A = plane.algebra
validate(A(x ** 2, y ** 3), 6 * x * y ** 2)
validate(check_jacobi(A).passed, True)

#Failing Poisson module: {x,e} = x*e, {y,e} = 0
M = PoissonModule(A, [[[x]], [[plane.ring.zero()]]])
validate(check_poisson_module(A, M)["module[x,y,e]"].residual, "-e")

##################################################################
# Hopf data
##################################################################
typea = catalog_get("typea")
B = typea.hopf
g, x = typea.ring.gens()
validate(str(B.delta_of(x)), "g@x + x@1")
validate(B.antipode_of(x), -g ** -1 * x)
validate(check_poisson_hopf(B).passed, True)
validate(check_poisson_hopf(catalog_get("group").hopf).passed, False)
validate(check_poisson_hopf(catalog_get("group-corrected").hopf).passed, True)

##################################################################
# Enveloping algebra
##################################################################
U = UEA(B)
validate(str(parse_word(U, "h(x)*m(g)")), "g*h(x) + g*x")
validate(str(parse_word(U, "h(x)*h(g)")), "h(g)*h(x) + x*h(g) + g*h(x)")

##################################################################
# H(B) and the cobracket
##################################################################
gk3 = catalog_get("gk3")
validate(quotient.cobracket(gk3.hopf).lines()[2], "d'(y3) = 2*(y1@y2 - y2@y1)")
validate(lie_on_a(typea.hopf).table(), ["[y2,y1] = y2"])

##################################################################
# Poisson cohomology
##################################################################
validate(cohomology.hp_table(A, 2, 6), {0: [1, 0, 0, 0, 0, 0, 0], 1: [0] * 7, 2: [0] * 7})
validate(cohomology.hp_compute(catalog_get("kx-trivial").algebra, 1, 6), [1] * 7)
