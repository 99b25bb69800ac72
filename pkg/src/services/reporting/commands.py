import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from src.exceptions import FactorizationException, LatticeAlgebraException, ParseError
from src.models.basis import FunctionFamily
from src.models.lex import LexFunctional
from src.models.scalar import format_scalar, parse_scalar
from src.schemas.automorphism.models import AutomorphismImagesPayload, PermDiagPayload
from src.schemas.common import load_payload
from src.schemas.lattice.models import FunctionFamilyPayload, VectorPayload
from src.schemas.lex.models import LexPayload
from src.schemas.operator.models import OperatorPayload
from src.schemas.report.models import Diagnostics, Report
from src.services.automorphism.factorizer import AutomorphismFactorizer
from src.services.basis.delta_basis import delta_basis
from src.services.lex.duals import is_order_bounded_lex, lex_dual_image, unboundedness_witness
from src.services.operator.algebra import apply
from src.services.operator.lattice import finite_truncation, is_positive_op, modulus_op
from src.services.operator.norm import op_norm
from src.services.operator.structure import invert

from .exit_codes import EXIT_SUCCESS, exit_code_for

logger = logging.getLogger(__name__)

CommandResult = Tuple[Any, str]


def compact_json(payload: Any) -> str:
    """Byte-stable single-line JSON used for text summaries."""
    return json.dumps(payload, sort_keys=True, separators=(", ", ": "))


class CommandRunner:
    """Runs one CLI command against the library and wraps the outcome in a Report."""

    def __init__(self, factorizer: AutomorphismFactorizer, digest_algorithm: str = "sha256", witness_bound: int = 1000000):
        """Initialize the command runner.

        :param factorizer: Engine used by the ``factor`` command
        :param digest_algorithm: hashlib algorithm for input digests
        :param witness_bound: Bound for unboundedness witnesses in ``lex-dual``
        """
        self.factorizer = factorizer
        self.digest_algorithm = digest_algorithm
        self.witness_bound = witness_bound
        self._commands: Dict[str, Callable[..., CommandResult]] = {
            "factor": self.cmd_factor,
            "norm": self.cmd_norm,
            "modulus": self.cmd_modulus,
            "apply": self.cmd_apply,
            "truncate": self.cmd_truncate,
            "check-positive": self.cmd_check_positive,
            "invert": self.cmd_invert,
            "delta-basis": self.cmd_delta_basis,
            "lex-dual": self.cmd_lex_dual,
        }

    @property
    def commands(self) -> List[str]:
        return list(self._commands)

    def run(self, command: str, paths: List[str], arguments: List[str]) -> Report:
        """Run ``command`` and return its report; library errors become diagnostics.

        :param command: Command name
        :param paths: Input file paths, in command order
        :param arguments: Inline arguments (labels or rationals)
        :returns: Report with result or diagnostics and the exit code
        """
        report = Report(command=command, arguments=list(arguments))
        try:
            texts = [self._read_input(path, report) for path in paths]
            result, summary = self._commands[command](*texts, *arguments)
        except LatticeAlgebraException as e:
            labels = list(e.labels) if isinstance(e, FactorizationException) else []
            logger.info(f"Command {command} failed with {type(e).__name__}: {e}")
            report.diagnostics = Diagnostics(error=type(e).__name__, labels=labels, message=str(e))
            report.exit_code = exit_code_for(e)
            return report

        report.result = result
        report.summary = summary
        report.exit_code = EXIT_SUCCESS
        return report

    def _read_input(self, path: str, report: Report) -> str:
        try:
            data = Path(path).read_bytes()
        except OSError as e:
            raise ParseError(f"Cannot read {path}: {e.strerror}") from e
        report.inputs[path] = hashlib.new(self.digest_algorithm, data).hexdigest()
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"{path} is not UTF-8 text") from e

    def cmd_factor(self, images_text: str) -> CommandResult:
        imgs = load_payload(AutomorphismImagesPayload, images_text).to_domain()
        payload = PermDiagPayload.from_domain(self.factorizer.factor(imgs)).model_dump()
        return payload, compact_json(payload)

    def cmd_norm(self, operator_text: str) -> CommandResult:
        norm = format_scalar(op_norm(load_payload(OperatorPayload, operator_text).to_domain()))
        return norm, norm

    def cmd_modulus(self, operator_text: str) -> CommandResult:
        return self._operator_result(modulus_op(load_payload(OperatorPayload, operator_text).to_domain()))

    def cmd_invert(self, operator_text: str) -> CommandResult:
        return self._operator_result(invert(load_payload(OperatorPayload, operator_text).to_domain()))

    def cmd_apply(self, operator_text: str, vector_text: str) -> CommandResult:
        t = load_payload(OperatorPayload, operator_text).to_domain()
        x = load_payload(VectorPayload, vector_text).to_domain()
        payload = VectorPayload.from_domain(apply(t, x)).model_dump()
        return payload, compact_json(payload)

    def cmd_truncate(self, operator_text: str, *labels: str) -> CommandResult:
        t = load_payload(OperatorPayload, operator_text).to_domain()
        return self._operator_result(finite_truncation(t, labels))

    def cmd_check_positive(self, operator_text: str) -> CommandResult:
        positive = is_positive_op(load_payload(OperatorPayload, operator_text).to_domain())
        return positive, "positive" if positive else "not positive"

    def cmd_delta_basis(self, family_text: str) -> CommandResult:
        functions = load_payload(FunctionFamilyPayload, family_text).to_domain()
        if not functions:
            raise ParseError("Function family must not be empty")
        result = delta_basis(FunctionFamily.of(functions))
        payload = {
            "basis": FunctionFamilyPayload.from_domain(list(result.basis)).model_dump(),
            "points": list(result.points),
        }
        return payload, compact_json(payload)

    def cmd_lex_dual(self, *coeffs: str) -> CommandResult:
        if not coeffs:
            raise ParseError("lex-dual needs at least one coefficient")
        phi = LexFunctional(tuple(parse_scalar(c) for c in coeffs))
        if is_order_bounded_lex(phi):
            image = format_scalar(lex_dual_image(phi))
            return {"order_bounded": True, "dual_image": image}, f"order-bounded; dual image {image}"
        witness = LexPayload.from_vector(unboundedness_witness(phi, self.witness_bound)).root
        payload = {"order_bounded": False, "bound": format_scalar(self.witness_bound), "witness": witness}
        return payload, f"not order-bounded; witness ({', '.join(witness)})"

    def _operator_result(self, operator) -> CommandResult:
        payload = OperatorPayload.from_domain(operator).model_dump()
        return payload, compact_json(payload)
