"""
Run configuration and handler registry behind the command-line interface.
"""

import logging
from dataclasses import dataclass, field as dc_field
from functools import partial
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import yaml

from src.binomial.extension import build_ext
from src.binomial.scan import binomial_report, check_scan_budget
from src.cli.conjecture import DEFAULT_DENSITY, conjecture_scan
from src.cli.output import count_red_flags
from src.cli.pool import ordered_map
from src.config import config
from src.equiv.transforms import verify_witness
from src.equiv.witness import EquivWitness
from src.errors import EvenCharacteristic, OddCharacteristic, WitnessFormatError
from src.gf.catalog import field_from_selector
from src.gf.field import FieldSpec
from src.homog3 import scan as homog_scan
from src.mpoly.parser import parse_system
from src.permoracle.brute_force import brute_force
from src.permoracle.hermite import hermite_check
from src.quadclass import scan as quad_scan
from src.quadclass.coeffs import QuadCoeffs

logger = logging.getLogger(__name__)

COMMANDS = (
    'check-perm', 'hermite', 'classify-quad', 'scan-quad', 'classify-homog3',
    'scan-homog3', 'scan-binomial', 'verify-equiv', 'conjecture-scan',
)
NEEDS_SYSTEM = {'check-perm', 'hermite', 'verify-equiv'}


@dataclass
class RunConfig:
    """
    Everything one CLI invocation needs; built by the click commands.
    """
    command: str
    field: str
    system: Optional[str] = None
    coeffs: Optional[str] = None
    target: Optional[str] = None
    witness_path: Optional[str] = None
    samples: int = 1000
    seed: int = dc_field(default_factory=lambda: config.DEFAULT_SEED)
    exhaustive: bool = False
    strict: bool = False
    even: bool = False
    density: float = DEFAULT_DENSITY
    out: Optional[str] = None
    fmt: str = 'json'
    workers: int = dc_field(default_factory=lambda: config.WORKERS)
    budget: Optional[int] = None

    def validate(self) -> List[str]:
        errors = []
        if self.command not in COMMANDS:
            errors.append(f"unknown command {self.command!r}")
        if self.command in NEEDS_SYSTEM and not self.system:
            errors.append(f"{self.command} needs --system")
        if self.command == 'classify-quad' and not (self.coeffs or self.system):
            errors.append("classify-quad needs --coeffs or --system")
        if self.command == 'classify-homog3' and not self.coeffs:
            errors.append("classify-homog3 needs --coeffs a1,a2,a3,b2,b3,b4")
        if self.command == 'verify-equiv' and not (self.target and self.witness_path):
            errors.append("verify-equiv needs --target and --witness")
        if self.samples < 0:
            errors.append("--samples must not be negative")
        if self.workers < 1:
            errors.append("--workers must be at least 1")
        if self.budget is not None and self.budget <= 0:
            errors.append("--budget must be positive")
        if not 0.0 <= self.density <= 1.0:
            errors.append("--density must lie in [0, 1]")
        if self.fmt not in ('json', 'table'):
            errors.append(f"unknown output format {self.fmt!r}")
        return errors

    def resolve_field(self) -> FieldSpec:
        return field_from_selector(self.field)


@dataclass
class RunResult:
    records: List[dict]
    summary: Dict = dc_field(default_factory=dict)

    @property
    def red_flags(self) -> int:
        return count_red_flags(self.records)


def _coeff_list(field: FieldSpec, text: str) -> List[int]:
    return [field.check(int(v, 0)) for v in text.replace(' ', '').split(',') if v]


def _with_system(system, record: dict) -> dict:
    return {'system': system.to_infix(), **record}


def handle_check_perm(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    system = parse_system(run.system, field)
    verdict = brute_force(system, run.budget)
    return RunResult([_with_system(system, verdict.to_record(field))])


def handle_hermite(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    system = parse_system(run.system, field)
    verdict = hermite_check(system, run.budget)
    oracle = brute_force(system)
    record = _with_system(system, verdict.to_record(field))
    record['oracle'] = oracle.is_perm
    record['agree'] = verdict.is_perm == oracle.is_perm
    return RunResult([record])


def handle_classify_quad(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    if run.coeffs:
        flat = _coeff_list(field, run.coeffs)
    else:
        flat = QuadCoeffs.from_system(parse_system(run.system, field)).flat()
    return RunResult([quad_scan.scan_record(field, flat)])


def handle_scan_quad(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    if run.exhaustive:
        tuples = quad_scan.exhaustive_tuples(field, run.budget)
    else:
        tuples = quad_scan.sampled_tuples(field, run.samples, run.seed)
    logger.info(f"Quadratic scan over {field!r} with {run.workers} workers")
    records = list(ordered_map(partial(quad_scan.scan_record, field), tuples, run.workers))
    return RunResult(records, {'summary': 'scan-quad', 'q': field.q, 'systems': len(records),
                               'permutations': sum(r['oracle']['is_perm'] for r in records)})


def handle_classify_homog3(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    return RunResult([homog_scan.scan_record(field, _coeff_list(field, run.coeffs))])


def handle_scan_homog3(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    tuples = homog_scan.homog_tuples(field, run.exhaustive, run.samples, run.seed, run.budget)
    records = list(ordered_map(partial(homog_scan.scan_record, field), tuples, run.workers))
    return RunResult(records, {'summary': 'scan-homog3', 'q': field.q, 'systems': len(records),
                               'permutations': sum(r['oracle']['is_perm'] for r in records)})


def handle_scan_binomial(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    if run.even and not field.is_even:
        raise OddCharacteristic(f"--even needs a characteristic-2 field, got {field!r}")
    if field.is_even and not run.even:
        raise EvenCharacteristic(f"{field!r} has characteristic 2; pass --even")
    ext = build_ext(field)
    check_scan_budget(ext, run.budget)
    report_for = partial(binomial_report, ext, strict=run.strict)
    reports = list(ordered_map(report_for, ext.elements(), run.workers))
    records = [r.to_record(ext) for r in reports]
    summary = {
        'summary': 'scan-binomial',
        'q': field.q,
        'reading': 'strict' if run.strict else 'literal',
        'predicted': sum(r.predicted for r in reports),
        'oracle': sum(r.oracle for r in reports),
        'disagreements': sum(not r.agree for r in reports),
    }
    return RunResult(records, summary)


def load_witness(field: FieldSpec, nvars: int, path: str) -> EquivWitness:
    """
    Witness steps from a YAML or JSON file: a list of tagged step dicts, or {'steps': [...]}.
    """
    with open(Path(path), 'r') as f:
        data = yaml.safe_load(f)
    if isinstance(data, dict):
        data = data.get('steps')
    if not isinstance(data, list):
        raise WitnessFormatError(f"{path} does not hold a list of witness steps")
    return EquivWitness.from_records(field, nvars, data)


def handle_verify_equiv(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    source = parse_system(run.system, field)
    target = parse_system(run.target, field)
    witness = load_witness(field, source.nvars, run.witness_path)
    verified = verify_witness(source, target, witness)
    source_perm = brute_force(source).is_perm
    target_perm = brute_force(target).is_perm
    record = {
        'source': source.to_infix(),
        'target': target.to_infix(),
        'steps': len(witness),
        'verified': verified,
        'source_is_perm': source_perm,
        'target_is_perm': target_perm,
        # equivalent systems must share their permutation verdict
        'agree': (source_perm == target_perm) if verified else None,
    }
    if not verified:
        logger.warning(f"Witness in {run.witness_path} does not carry {source.to_infix()} to {target.to_infix()}")
    return RunResult([record])


def handle_conjecture_scan(run: RunConfig) -> RunResult:
    field = run.resolve_field()
    records, summary = conjecture_scan(field, run.samples, run.seed, run.exhaustive, run.density, run.workers)
    return RunResult(records, summary)


HANDLERS: Dict[str, Callable[[RunConfig], RunResult]] = {
    'check-perm': handle_check_perm,
    'hermite': handle_hermite,
    'classify-quad': handle_classify_quad,
    'scan-quad': handle_scan_quad,
    'classify-homog3': handle_classify_homog3,
    'scan-homog3': handle_scan_homog3,
    'scan-binomial': handle_scan_binomial,
    'verify-equiv': handle_verify_equiv,
    'conjecture-scan': handle_conjecture_scan,
}


def dispatch(run: RunConfig) -> Tuple[int, RunResult]:
    """
    Route a validated RunConfig to its handler.

    Returns:
        (exit status, result): 0 when no record disagrees with its oracle,
        fails to verify or is unresolved; 1 otherwise
    """
    errors = run.validate()
    if errors:
        raise ValueError("; ".join(errors))
    logger.debug(f"Dispatching {run.command} over field {run.field}")
    result = HANDLERS[run.command](run)
    status = 1 if result.red_flags else 0
    if status:
        logger.warning(f"{run.command}: {result.red_flags} flagged records")
    return status, result
