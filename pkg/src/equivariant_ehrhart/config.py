"""Computation settings shared by the pipeline and the command line."""

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ORDER_CAP = 10080


class ComputeConfig(BaseModel):
    """Settings for an equivariant Ehrhart computation.

    Frozen so a single instance can be shared between concurrent workers.
    """

    model_config = ConfigDict(frozen=True)

    order_cap: int = Field(
        default=DEFAULT_ORDER_CAP,
        ge=1,
        description="Largest group order accepted when closing generators",
    )
    truncation: int | None = Field(
        default=None,
        ge=0,
        description="Degree up to which non-polynomial H* coefficients are reported; "
        "None selects 4*N*(d+1)",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Process-pool width for per-class work (1 runs inline)",
    )
    max_concurrent_classes: int = Field(
        default=8,
        ge=1,
        description="Number of conjugacy classes processed concurrently",
    )
    cache_dir: str | None = Field(
        default=None,
        description="Directory of the persistent Ehrhart series cache",
    )
    face_dim_limit: int = Field(
        default=6,
        ge=0,
        description="Largest polytope dimension for face enumeration",
    )
    certificate_dim_limit: int = Field(
        default=5,
        ge=0,
        description="Largest polytope dimension for hypersurface certificates",
    )

    def truncation_for(self, exponent: int, dim: int) -> int:
        """Reporting degree for non-polynomial H*, defaulting to 4*N*(d+1)."""
        if self.truncation is not None:
            return self.truncation
        return 4 * exponent * (dim + 1)


__all__ = ["ComputeConfig", "DEFAULT_ORDER_CAP"]
