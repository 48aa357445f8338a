"""Run settings with Pydantic validation.

Every value here is a desk-scale cap or a default for the search code.
Runs must be reproducible from the command line alone, so the only
settings source is keyword arguments: no .env file and no environment
variables are read.  The CLI applies its flags with ``apply_overrides``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

FamilyConvention = Literal["raw", "label", "automorphism"]


class Settings(BaseSettings):
    """Global search and scan settings."""

    model_config = SettingsConfigDict(extra="ignore", validate_assignment=True)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    # --- Graph core ---
    canonical_max_order: int = Field(
        default=12,
        description="Largest order accepted by canonical_form",
    )
    enumeration_max_order: int = Field(
        default=8,
        description="Largest order for connected-graph enumeration",
    )
    tree_max_order: int = Field(
        default=12,
        description="Largest order for tree enumeration",
    )

    # --- Automorphisms / labeling search ---
    automorphism_cap: int = Field(
        default=1_000_000,
        description="Maximum automorphism group order materialised as an element list",
    )
    stabilizer_pruning_cap: int = Field(
        default=5040,
        description="Largest prefix stabilizer used for orbit pruning in labeling searches",
    )

    # --- Line graphs ---
    root_oracle_max_order: int = Field(
        default=7,
        description="Largest order accepted by the brute-force root graph oracle",
    )

    # --- Graphoidal covers ---
    cover_edge_cap: int = Field(
        default=10,
        description="Largest host edge count for exhaustive cover enumeration",
    )
    cover_count_cap: int = Field(
        default=200_000,
        description="Maximum number of covers produced for one host",
    )
    scheme_repair_cap: int = Field(
        default=5000,
        description="Omega labelings plus direction choices tried when repairing a tuple labeling",
    )

    # --- Trees ---
    family_t_convention: FamilyConvention = Field(
        default="automorphism",
        description="Equivalence under which 'unique v-distinguishing labeling' is counted",
    )

    # --- Application ---
    default_jobs: int = Field(default=1, description="Worker processes for theorem scans")
    log_level: str = Field(default="WARNING", description="Logging level")
    catalog_path: Path = Field(
        default=Path(__file__).resolve().parent / "catalog.yaml",
        description="Path to the named-graph catalog YAML",
    )


def apply_overrides(**overrides: Any) -> None:
    """Assign non-None overrides onto the shared settings instance."""
    for key, value in overrides.items():
        if value is not None:
            setattr(settings, key, value)


# Singleton instance
settings = Settings()
