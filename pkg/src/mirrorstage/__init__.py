"""Interactive audio-driven video mirror engine.

Mirrors a video stream, listens for a sustained homogeneous sound to advance
a performer through four visual stages, and at the final stage composites a
hand-tracked spectral star whose size follows hand separation.
"""

from .matrix import (
    ArgbMatrix,
    DimensionMismatchError,
    Plane,
    add_sat,
    average,
    pack,
    solvent_split,
    subtract_sat,
    tint_progress,
    unpack,
)
from .geometry import (
    AffineTransform2D,
    SingularTransformError,
    affine_transform,
    mirror_y,
    repos,
    scale_about_center,
)
from .tracking import BoundingBox, ColorRange, draw_outline, find_bounds, pick_color
from .audio import (
    AudioFrame,
    FrameTooShortError,
    PitchReading,
    ProgressState,
    StabilityConfig,
    estimate_pitch_amplitude,
    progress,
    stability_step,
)
from .effects import (
    NoiseParams,
    StarParams,
    burn_stage,
    dissolve,
    fft_star,
    fractal_noise,
    logistic_transmute,
    star_composite,
)
from .engine import (
    EngineConfig,
    Stage,
    TelemetrySnapshot,
    apply_override,
    process_frame,
    route,
)

__version__ = "0.1.0"

__all__ = [
    "ArgbMatrix",
    "Plane",
    "DimensionMismatchError",
    "unpack",
    "pack",
    "solvent_split",
    "subtract_sat",
    "add_sat",
    "average",
    "tint_progress",
    "AffineTransform2D",
    "SingularTransformError",
    "mirror_y",
    "affine_transform",
    "repos",
    "scale_about_center",
    "ColorRange",
    "BoundingBox",
    "pick_color",
    "find_bounds",
    "draw_outline",
    "AudioFrame",
    "PitchReading",
    "StabilityConfig",
    "ProgressState",
    "FrameTooShortError",
    "estimate_pitch_amplitude",
    "stability_step",
    "progress",
    "NoiseParams",
    "StarParams",
    "logistic_transmute",
    "dissolve",
    "fractal_noise",
    "fft_star",
    "burn_stage",
    "star_composite",
    "EngineConfig",
    "TelemetrySnapshot",
    "Stage",
    "route",
    "process_frame",
    "apply_override",
    "__version__",
]
