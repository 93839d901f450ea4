from .basis import BASIS_MATRICES, basis_matrix, concat, pad
from .families import FAMILIES, build, concat_all, will_original, will_scaling
from .tuning import rym_residual, tune_parameter
