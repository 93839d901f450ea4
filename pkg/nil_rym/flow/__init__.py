from .gradient_flow import direction_array, gradient, integrate, integrate_many, residual_array
from .limits import detect_limit
