"""Strong E-embeddings of finite Coxeter groups and Elnitsky tilings of reduced words."""
from .coxeter import (CoxeterGroup, CoxeterMatrix, GroupElement, GroupSpecError, RootSystem,
                      build_root_system, parse_group_spec)
from .embedding import (EmbeddingTable, GeneratorImage, VerificationReport, build_embedding,
                        format_cycles, image_of_word, sym_bruhat_leq, verify_E, verify_strong_E,
                        verify_strong_E_reflections)
from .orders import (LinearExtension, Poset, RefinementError, bruhat_leq, build_poset,
                     count_linear_extensions, refine, weak_leq)
from .parabolic import (CosetSystem, ParabolicError, core_free_check, decompose,
                        enumerate_min_reps, project)
from .tiling import (DirectionSet, NotReducedError, TilingDoc, advance_frontier, check_tiling,
                     cluster_transpositions, polygon_outline, render_json, render_svg,
                     step_frames, tile_word)

__version__ = "0.1.0"
