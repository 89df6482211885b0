"""Permutation-group 3-colorings, solvable-subgroup search, and certified
verification of the solvable-subgroup / character-degree inequalities.

Subpackages:

* ``gfield``       -- exact arithmetic in small finite fields GF(p^f)
* ``permcore``     -- the permutation-group engine (closure, orbits, blocks,
                      solvability, Sylow/Hall machinery)
* ``constructors`` -- PSL2/PGL2/PGammaL2 on the projective line, Sym/Alt,
                      direct products, and the group-spec mini-language
* ``coloring``     -- distinguishing 3-colorings for 2-groups and solvable
                      groups, Gluck-set search, color-preserver subgroups
* ``ssearch``      -- S(G), the largest solvable subgroup order, by the
                      cyclic-extension method, plus brute-force oracles
* ``chardeg``      -- character-degree data: PSL2 multisets, hook lengths,
                      the embedded sporadic/family tables
* ``verifier``     -- directed-rounding interval certification of every
                      family inequality, sweep + tail certificates
* ``cli``          -- the ``trichrome`` command-line entry point
"""

__version__ = "0.1.0"
