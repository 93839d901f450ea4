from dataclasses import dataclass

import numpy as np

from nil_rym.errors.structure_errors import DimensionLimitError, StructureShapeError

MAX_Q = 64


@dataclass(frozen=True, eq=False)
class StructureTuple:
    """
    A tuple (C^1, ..., C^p) of skew-symmetric q x q matrices, the structure
    matrices of a metric 2-step nilpotent Lie algebra with
    [e_i, e_j] = sum_k C^k_ij e_{q+k}.

    Attributes:
    - q: int - Codimension of the commutator, size of every matrix.
    - p: int - Number of matrices.
    - matrices: np.ndarray - Read-only float64 array of shape (p, q, q).
    - label: str - Optional human-readable name.

    Properties:
    - n: Dimension q + p of the Lie algebra.
    - norm: Norm of the tuple under the inner product on so(q)^p.
    - is_zero: Whether every entry vanishes.
    - skew_defect: Largest |C^k_ij + C^k_ji| over all entries.

    Methods
    - from_matrices: Build a tuple from a list of square matrices.
    - with_label: Copy with a new label.
    - as_dict: Get the state of the object in a dictionary format.
    """

    q: int
    p: int
    matrices: np.ndarray
    label: str = None

    def __post_init__(self):
        q, p = int(self.q), int(self.p)
        if q < 1 or p < 1:
            raise StructureShapeError(f"Need q >= 1 and p >= 1, got q={q}, p={p}.")
        if q > MAX_Q:
            raise DimensionLimitError(q, MAX_Q)
        try:
            arr = np.array(self.matrices, dtype=np.float64)
        except ValueError as e:
            raise StructureShapeError(f"Matrices do not form a ({p}, {q}, {q}) array: {e}")
        if arr.ndim != 3 or arr.shape[0] != p:
            raise StructureShapeError(
                f"Expected {p} matrices of size {q}x{q}, got array of shape {arr.shape}."
            )
        for k, mat in enumerate(arr):
            if mat.shape != (q, q):
                raise StructureShapeError(f"Matrix {k} has shape {mat.shape}, expected ({q}, {q}).")
        arr.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "matrices", arr)

    @classmethod
    def from_matrices(cls, matrices, label: str = None) -> "StructureTuple":
        """
        Build a tuple from a sequence of square matrices.

        Parameters:
            - matrices: Sequence of p array-likes, each q x q.
            - label (str): Optional name.
        """
        mats = [np.asarray(m, dtype=np.float64) for m in matrices]
        if not mats:
            raise StructureShapeError("A structure tuple needs at least one matrix.")
        q = mats[0].shape[0] if mats[0].ndim == 2 else 0
        for k, mat in enumerate(mats):
            if mat.shape != (q, q):
                raise StructureShapeError(f"Matrix {k} has shape {mat.shape}, expected ({q}, {q}).")
        return cls(q=q, p=len(mats), matrices=np.stack(mats), label=label)

    @classmethod
    def zeros(cls, q: int, p: int, label: str = None) -> "StructureTuple":
        return cls(q=q, p=p, matrices=np.zeros((p, q, q)), label=label)

    def with_label(self, label: str) -> "StructureTuple":
        return StructureTuple(self.q, self.p, self.matrices, label)

    @property
    def n(self) -> int:
        """
        Get the dimension of the Lie algebra.
        """
        return self.q + self.p

    @property
    def norm(self) -> float:
        """
        Get the norm sqrt(sum_a tr(C^a C^a^t)).
        """
        return float(np.sqrt(np.sum(self.matrices * self.matrices)))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.matrices)

    @property
    def skew_defect(self) -> float:
        return float(np.max(np.abs(self.matrices + np.transpose(self.matrices, (0, 2, 1)))))

    def __len__(self):
        return self.p

    def __getitem__(self, k):
        return self.matrices[k]

    def __iter__(self):
        return iter(self.matrices)

    def __eq__(self, other):
        if not isinstance(other, StructureTuple):
            return NotImplemented
        return (self.q, self.p) == (other.q, other.p) and np.array_equal(
            self.matrices, other.matrices
        )

    def __hash__(self):
        return hash((self.q, self.p, self.matrices.tobytes()))

    def __add__(self, other: "StructureTuple") -> "StructureTuple":
        if (self.q, self.p) != (other.q, other.p):
            raise StructureShapeError(
                f"Cannot add tuples of shapes ({self.p}, {self.q}) and ({other.p}, {other.q})."
            )
        return StructureTuple(self.q, self.p, self.matrices + other.matrices)

    def __sub__(self, other: "StructureTuple") -> "StructureTuple":
        return self + other * -1.0

    def __mul__(self, scalar: float) -> "StructureTuple":
        return StructureTuple(self.q, self.p, self.matrices * float(scalar), self.label)

    __rmul__ = __mul__

    def as_dict(self) -> dict:
        """
        Get the state of the object in a dictionary format.
        """
        return {
            "q": self.q,
            "p": self.p,
            "matrices": self.matrices.tolist(),
            "label": self.label,
        }
