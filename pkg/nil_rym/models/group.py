from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class GroupElement:
    """
    An element (g, h) of GL_q x GL_p. A factor left as None is the identity.
    """

    g: np.ndarray = None
    h: np.ndarray = None


@dataclass(frozen=True, eq=False)
class TangentElement:
    """
    An element (X, Y) of gl_q x gl_p. A factor left as None is zero.
    """

    X: np.ndarray = None
    Y: np.ndarray = None
