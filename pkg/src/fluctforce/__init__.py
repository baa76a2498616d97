"""Nonequilibrium fluctuational forces and torques on small bodies.

Vacuum friction on moving particles, steady-state temperature ratios,
self-propulsion of two-part bodies, nonreciprocal and chiral vacuum torques,
and the terminal velocities left behind by thermal relaxation.
"""

from .curves import ScalarCurve, read_curve
from .dynamics import (DimensionlessDrive, TensorPolarizability,
                       antihermitian_part, chiral_torque, janus_force_closed,
                       nonreciprocal_torque, propulsion_force,
                       small_wrench_torque)
from .friction import (Mechanism, NessQuery, SurfaceScenario,
                       einstein_hopf_force, ness_ratio, slowdown_t0,
                       slowdown_time, surface_friction)
from .geometry import (Ball, Box, Cylinder, DualFlag, DualWrench, GenericPair,
                       JanusBall, Segment, TwoPartBody, mc_pair_oracle,
                       pair_integral_IAB, pair_integral_JAB,
                       wrench_JAB_reduced)
from .kernels import (BACKEND, PhiEvalPolicy, coth_diff, f_n, phi,
                      phi_over_r8, planck_diff, radiation_reaction_imalpha)
from .materials import (GOLD, Dielectric, DrudeMetal, GyrotropicSphere,
                        MonomialAbsorber, drude_chi, skin_depth,
                        susceptibility_product)
from .quadrature import Estimate, QuadratureSpec, ToleranceError
from .relaxation import (CoolingModel, RelaxationProblem, cooling_time,
                         moment_of_inertia, net_power, terminal_velocity,
                         terminal_angular_velocity)
from .units import UnitContext, ThermalPair, UNITS

__version__ = "0.1.0"
