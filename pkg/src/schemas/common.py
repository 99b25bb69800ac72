from typing import Annotated, Type, TypeVar

from pydantic import AfterValidator, BaseModel, ValidationError

from src.exceptions import ParseError
from src.models.scalar import parse_scalar

PayloadT = TypeVar("PayloadT", bound=BaseModel)


def _validate_rational(v: str) -> str:
    try:
        parse_scalar(v)
    except ParseError as e:
        raise ValueError(str(e)) from e
    return v


RationalText = Annotated[str, AfterValidator(_validate_rational)]


def load_payload(model: Type[PayloadT], text: str) -> PayloadT:
    """Validate a JSON document against a wire model.

    :raises ParseError: If the document is not valid JSON or does not fit the model
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(f"Invalid {model.__name__}: {e.error_count()} error(s): {e.errors()[0]['msg']}") from e
