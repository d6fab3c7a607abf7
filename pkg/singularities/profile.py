"""Singularity profile model."""

from typing import Dict, List

from pydantic import BaseModel, Field

PROFILE_FIELDS = ("a2", "a3", "a4", "a6", "a8", "a12", "b4", "b6")


class SingularityProfile(BaseModel):
    """Counts of isolated terminal quotient singularities by analytic type."""

    a2: int = Field(default=0, ge=0)
    a3: int = Field(default=0, ge=0)
    a4: int = Field(default=0, ge=0)
    a6: int = Field(default=0, ge=0)
    a8: int = Field(default=0, ge=0)
    a12: int = Field(default=0, ge=0)
    b4: int = Field(default=0, ge=0)
    b6: int = Field(default=0, ge=0)

    model_config = {"frozen": True}

    def as_list(self) -> List[int]:
        """The ordered 8-tuple [a2, a3, a4, a6, a8, a12, b4, b6]."""
        return [getattr(self, name) for name in PROFILE_FIELDS]

    def legacy_list(self) -> List[int]:
        """Seven-slot form without a12: [a2, a3, a4, a6, a8, b4, b6]."""
        return [getattr(self, name) for name in PROFILE_FIELDS if name != "a12"]

    def key(self) -> tuple:
        return tuple(self.as_list())

    def describe(self) -> str:
        parts = [f"{name}={getattr(self, name)}" for name in PROFILE_FIELDS if getattr(self, name)]
        return ", ".join(parts) if parts else "smooth"

    @classmethod
    def parse(cls, text: str) -> "SingularityProfile":
        """Parse ``a2=45,a4=2`` style text (b4sing / b6sing accepted for b4 / b6)."""
        values: Dict[str, int] = {}
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            name, _, value = chunk.partition("=")
            name = name.strip().replace("sing", "")
            if name not in PROFILE_FIELDS:
                raise ValueError(f"Unknown singularity type {name!r}")
            values[name] = int(value)
        return cls(**values)
