"""Spin entanglement of two fermions drawn from a harmonically trapped Fermi gas."""

from ._backend import active as kernel_backend
from .bcs import (BcsKernels, BcsModel, bcs_kernels, bogoliubov, build_levels, build_model,
                  solve_gap, uniform_overlap_threshold)
from .density import TwoSpinDensityMatrix, rho_bcs, rho_even, rho_odd, rho_trap
from .errors import (DegenerateLevelError, DegeneratePointError, DistanceNotFoundError,
                     DomainError, FermitrapError, InfiniteDistanceError, InvalidKernelError,
                     InvalidParameterError, InvalidStateError)
from .measures import (PptReport, concurrence_bcs_uniform, concurrence_pair,
                       ppt_min_eigenvalue, wootters_concurrence)
from .oscillator import OscillatorBasis, eval_ladder, eval_mode
from .pairs import (OddCorrection, PairKernels, TrapConfiguration, density_N, kernel_F,
                    odd_correction, pair_kernels)

__version__ = "0.1.0"
