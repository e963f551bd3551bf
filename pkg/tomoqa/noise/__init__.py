from .additive import apply_noise, draw_noise, view_generators
from .types import NoiseRealization

__all__ = ["apply_noise", "draw_noise", "view_generators", "NoiseRealization"]
