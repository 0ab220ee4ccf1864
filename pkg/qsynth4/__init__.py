"""
qsynth4 - quaternary (GF(4)) logic synthesis

- gf4: field arithmetic, shift and projection operations
- circuit / netlist: gate netlists and their text format
- simulator: exhaustive basis-state simulation and equivalence
- synthesizer: minterm expressions, simplification, lowering to gates
- lowering / search: M-S level gadgets and a decomposition search
"""

__version__ = "0.1.0"
