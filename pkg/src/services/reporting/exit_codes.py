from src.exceptions import (
    InconsistentScaling,
    NotAtomColumn,
    NotInjective,
    NotInvertible,
    NotMultiplicative,
    NotPositive,
    NotRankOne,
    ParsingException,
)

EXIT_SUCCESS = 0
EXIT_OTHER = 9

# Stable, documented exit codes; order matters only for subclasses.
EXIT_CODES = (
    (ParsingException, 1),
    (NotRankOne, 2),
    (NotPositive, 3),
    (NotAtomColumn, 4),
    (NotInjective, 5),
    (InconsistentScaling, 6),
    (NotMultiplicative, 7),
    (NotInvertible, 8),
)


def exit_code_for(error: Exception) -> int:
    for error_class, code in EXIT_CODES:
        if isinstance(error, error_class):
            return code
    return EXIT_OTHER
