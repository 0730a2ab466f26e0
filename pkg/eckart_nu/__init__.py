from .config import CONFIG  # noqa: F401 (import unused)
from .model import EckartModel, PhysicalConstants, QuantumNumbers  # noqa: F401
from .centrifugal import ApproximationScheme  # noqa: F401
from .spectrum import BoundState  # noqa: F401
