"""
Bound-state spectra, self-adjoint extension families, delta-shell
regularization, and spin-dependent scattering for a neutral fermion with an
anomalous magnetic moment in the Aharonov-Casher field of a charged line.
"""

__version__ = "0.1.0"

from .channels import Channel, Coupling, Region, classify, decompose, \
    enumerate_channels
from .errors import (BracketError, DegenerateConfigError, DomainError,
                     ForwardDirectionError, GammaPoleError, NoBoundStateError,
                     NoEigenvalueError, NumericalError, PoleInResidualError)
from .sae import (BoundState, ExtensionParameter, SpectrumReport,
                  bound_energy_closed, bound_energy_log, bound_state,
                  bound_wavefunction, continuum_wavefunction, find_pole,
                  ingoing_coefficient, spectrum_report)
from .scattering import (ScatteringTable, SpinState, amplitude_spin_x,
                         amplitude_spin_z, cross_section_spin_x,
                         cross_section_spin_z, extract_amplitude,
                         partial_wave_field, pole_scan)
from .shell import (ShellConfig, attraction_window,
                    effective_extension_parameter, matching_residual,
                    numerov_bound_energy, renormalize_coupling,
                    shell_bound_energy_closed, shell_bound_energy_exact)
