"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This library helps you build string groups generated by involutions from permutation representation graphs,
decide the intersection property exactly, analyse fracture graphs and splits, apply sesqui-extensions and
rank-and-degree extensions, and enumerate string C-groups of symmetric groups up to isomorphism and duality.

:see: https://github.com/hunyadi/pystringc
"""

__version__ = "0.3.0"
__author__ = "Levente Hunyadi"
__copyright__ = "Copyright 2024, Levente Hunyadi"
__license__ = "MIT"
__maintainer__ = "Levente Hunyadi"
__status__ = "Beta"
