from dataclasses import dataclass, fields, replace

from django.conf import settings


@dataclass(frozen=True)
class Tolerances:
    """Every tolerance and numerical knob of the pipeline in one record."""
    root_polish: float = 1e-12
    residual: float = 1e-8
    cluster: float = 1e-9
    unimodular: float = 1e-12
    pole: float = 1e-14
    root_iterations: int = 500
    fiber_residual: float = 1e-11
    separation: float = 1e-6
    max_step: float = 0.02
    newton_iterations: int = 10
    bisection_depth: int = 40
    collision: float = 1e-9
    block_spread: float = 1e-9
    partition: float = 1e-7
    mobius_fit: float = 1e-7
    enumeration_cap: int = 200000
    max_degree: int = 16
    grid: int = 200
    seed: int = 0
    random_radius: float = 0.8
    workers: int = 1

    @classmethod
    def from_settings(cls):
        configured = getattr(settings, 'BLASCHKE', {})
        values = {}
        for field in fields(cls):
            key = field.name.upper()
            if key in configured:
                values[field.name] = field.type(configured[key])
        return cls(**values)

    def override(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)


def get_tolerances(tol=None):
    return tol if tol is not None else Tolerances.from_settings()
