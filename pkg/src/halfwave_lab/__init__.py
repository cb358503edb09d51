"""halfwave_lab: numerical laboratory for the half-wave maps equation.

Subpackages:
  algebra    - Pauli / su(1,1) vector algebra for both targets
  spectral   - Fourier multipliers (|grad|, Hilbert transform, d/dx)
  lax        - truncated Lax pair matrices and spectral diagnostics
  evolution  - constraint-preserving time integration on S^2 and H^2
  chain      - classical Haldane-Shastry spin chain and continuum limit
  solitons   - Blaschke traveling-wave profiles on the real line
  config     - scenario configuration files
  runner     - scenario dispatch and CSV/JSON artifacts
"""

from .algebra import cross, eta_cross, eta_dot, pauli_map, su11_map
from .chain import (SpinChain, chain_energy, chain_rhs_direct, chain_rhs_fft,
                    chain_run, chain_step, continuum_compare)
from .config import ConfigError, ScenarioConfig, parse_config
from .evolution import (DiagnosticsRecord, LaxDiagnostics, energy, hwm_rhs,
                        hwmh_rhs, run, step, total_spin)
from .fields import (HyperbolicField, SpinField, constant_field, great_circle,
                     hyperbolic_circle, hyperbolic_circle_exact,
                     random_band_limited, random_rational, tilted_circle,
                     tilted_circle_exact)
from .lax import (LaxMatrix, SpectrumReport, build_B, build_L,
                  kernel_trace_oracle, lax_residual, spectrum,
                  trace_sq_closed_form)
from .runner import dispatch
from .solitons import (BlaschkeProfile, RankFourLax, blaschke_eval,
                       profile_energy, profile_energy_quadrature,
                       profile_eval, profile_residual, rank_four_lax)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
