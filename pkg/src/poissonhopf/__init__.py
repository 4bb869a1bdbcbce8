#!/usr/bin/env python
from poissonhopf.errors import (PoissonHopfError, RingMismatchError, DomainError, StructureError,
                                BindingError, NotSupportedError, ParseError)
from poissonhopf.polynomial import GeneratorSet, LaurentPoly
from poissonhopf.tensor import TensorElement, tensor, tensor_mul
from poissonhopf.report import Report, CheckResult
from poissonhopf.poisson import (PoissonAlgebra, PoissonModule, OreData, extend_bracket, check_jacobi,
                                 check_poisson_module, check_ore_data, make_ore_extension)
from poissonhopf.hopf import (HopfData, OreHopfData, Functional, apply_structure_map, check_hopf_axioms,
                              check_poisson_hopf, check_ore_hopf)
from poissonhopf.uea import NCWord, PBWElement, UEA, h_of, normal_form, uea_mul, uea_structure_map
from poissonhopf.liealgebra import LieAlgebraA, HAlgebra, HElement, lie_on_a
from poissonhopf.quotient import (QuotientComodule, Cobracket, quotient_pi, comodule_lambda,
                                  partition_lambda, upsilon, upsilon_module, galois_beta, cobracket,
                                  invariant_matrix)
from poissonhopf.smash import (BiproductInput, KGEnvelope, SmashAlgebra, SmashElement, kg_env,
                               smash_action, smash_mul, check_star, check_module_algebra, check_generation)
from poissonhopf.cohomology import (MultiDerivation, ChainElement, coboundary, hp_compute,
                                    homology_boundary)
from poissonhopf.parser import AlgebraFile, parse_algebra, parse_word, format_algebra, read_algebra
from poissonhopf.catalog import catalog_get, catalog_list
from poissonhopf.checks import run_all
from poissonhopf.cli import run
