from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Size limits for the exhaustive computations.

    Diagram checks cost up to ``|objs|**6`` evaluations, so the defaults keep
    everything at desk scale.
    """

    max_ring: int = 32
    max_module: int = 32
    max_free_dims: int = 6
    max_u_candidates: int = 2**20
    max_search: int = 2**20
    max_oracle_candidates: int = 2**16
    workers: int = 1

    def override(self, **kwargs) -> "Caps":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CAPS = Caps()
