from platjones.algebra.qarith import (Level, Spin, casimir, qdim, qdim_product, qfactorial, qint,
                                      qpower, root_of_unity)
from platjones.algebra.recoupling import (ElementaryDualityMatrix, SixJ, Triple, admissible,
                                          elementary_duality, fmove, fusion_channels, qsixj, rmove)
