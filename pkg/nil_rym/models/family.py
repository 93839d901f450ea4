from dataclasses import dataclass, field

SQUARED_SUFFIX = "_sq"


@dataclass(frozen=True)
class FamilySpec:
    """
    A catalogue family and its parameters.

    Attributes:
    - name: str - heisenberg, a1, b_basis, will, example2 or example3.
    - params: dict - Family parameters. Scalars are floats, k is an int,
      coefficient lists are tuples, example2 pairs are tuples of (b, c).

    Parameter keys ending in "_sq" set the square of the named scalar, so
    {"a_sq": 0.5} means a = sqrt(0.5).
    """

    name: str
    params: dict = field(default_factory=dict)

    def with_value(self, key: str, value) -> "FamilySpec":
        """
        Copy of the spec with one parameter replaced.

        Parameters:
            - key (str): Parameter name, possibly with the "_sq" suffix.
            - value: New value.
        """
        params = dict(self.params)
        if key.endswith(SQUARED_SUFFIX):
            params.pop(key, None)
            key, value = key[: -len(SQUARED_SUFFIX)], float(value) ** 0.5
        params[key] = value
        return FamilySpec(self.name, params)

    def resolved(self) -> "FamilySpec":
        """
        Copy with every "_sq" key replaced by its square root under the plain name.
        """
        spec = FamilySpec(self.name, {k: v for k, v in self.params.items() if not k.endswith(SQUARED_SUFFIX)})
        for key, value in self.params.items():
            if key.endswith(SQUARED_SUFFIX):
                spec = spec.with_value(key, value)
        return spec
