from typing import Optional

from src.config import Settings, get_settings

from .factorizer import AutomorphismFactorizer


def make_automorphism_factorizer(settings: Optional[Settings] = None) -> AutomorphismFactorizer:
    """Factory function to create an automorphism factorizer.

    :param settings: Optional settings instance
    :returns: AutomorphismFactorizer instance
    """
    if settings is None:
        settings = get_settings()

    return AutomorphismFactorizer(
        check_multiplicativity=settings.factorization.check_multiplicativity,
        normalize_output=settings.factorization.normalize_output,
    )
