from platjones.braids.braid import (ColoredBraidWord, LevelSlice, StrandState, mirror, parse,
                                    render, slice_at)
from platjones.braids.kaulrep import (Basis, FusionPath, RepMatrix, compose, duality_decomposition,
                                      duality_matrix, enumerate_basis, even_generator,
                                      half_twist_eigenvalue, odd_generator, word_matrix)
from platjones.braids.invariant import InvariantValue, evaluate, evaluate_trace_of_word
