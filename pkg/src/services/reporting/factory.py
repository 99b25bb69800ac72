from typing import Optional

from src.config import Settings, get_settings
from src.services.automorphism.factory import make_automorphism_factorizer

from .commands import CommandRunner
from .renderer import ReportRenderer


def make_command_runner(settings: Optional[Settings] = None) -> CommandRunner:
    """Factory function to create the CLI command runner.

    :param settings: Optional settings instance
    :returns: CommandRunner instance
    """
    if settings is None:
        settings = get_settings()

    return CommandRunner(
        factorizer=make_automorphism_factorizer(settings),
        digest_algorithm=settings.cli.digest_algorithm,
        witness_bound=settings.lex.witness_bound,
    )


def make_report_renderer(settings: Optional[Settings] = None, output_format: Optional[str] = None) -> ReportRenderer:
    """Factory function to create a report renderer.

    :param settings: Optional settings instance
    :param output_format: Overrides the configured default format
    :returns: ReportRenderer instance
    """
    if settings is None:
        settings = get_settings()

    return ReportRenderer(
        output_format=output_format or settings.cli.default_format,
        json_indent=settings.cli.json_indent,
    )
