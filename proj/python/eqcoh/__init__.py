from ._eqcoh import apply, canonical_config, check, cohomology_tsv, validate

__all__ = ["apply", "canonical_config", "check", "cohomology_tsv", "validate"]
