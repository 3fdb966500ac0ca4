"""Two-by-two matrix formalism for Lorentz-group physics.

Submodules: ``mat2core`` (SL(2,c), generators, the 4x4 map), ``oscillator``,
``decomp`` (trace classes, Bargmann/Wigner/Iwasawa), ``littlegroup``,
``poincare`` (polarization optics), ``spinorbilinear``, ``suites`` and ``cli``.
"""

from . import decomp, littlegroup, mat2core, oscillator, poincare, spinorbilinear
from ._kernels import BACKEND
from .decomp import (
    BargmannParams,
    TraceClass,
    WignerKind,
    WignerParams,
    bargmann_decompose,
    classify,
    decompose,
    iwasawa_decompose,
    wigner_decompose,
    wigner_power,
)
from .littlegroup import (
    GaugeParams,
    ParticleClass,
    PhotonPotential,
    boosted_little_group,
    gauge_element,
    gauge_element_4x4,
    gauge_transform_potential,
    gauge_transform_spinor,
    gauge_violation,
    little_group_element,
    wigner_condition_holds,
)
from .mat2core import (
    GENERATORS,
    DeterminantError,
    FourMomentum,
    FourVector,
    boost_z,
    det,
    generator,
    hermitian_transform,
    rotation_y,
    rotation_z,
    squeeze_x,
    to_four_by_four,
)
from .oscillator import Mode, OscillatorSystem, StateVector, evolve, propagator
from .poincare import (
    CoherencyMatrix,
    JonesVector,
    StokesVector,
    coherency_from_jones,
    mass_interpolate,
    poincare_radius,
    stokes,
    transform_coherency,
)
from .spinorbilinear import (
    BILINEAR_TABLE,
    Bilinear,
    FieldTensor,
    SpinorSymbol,
    massless_limit_tensor,
    q_transform,
    scalars,
    tensor_components,
)

__version__ = "0.1.0"
