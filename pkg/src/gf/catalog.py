"""
Field selection from the YAML catalogue or from inline `p^m[:modulus]` selectors.
"""

import logging
import re
from pathlib import Path
from typing import Dict, Optional, Union

import yaml

from src.config import config
from src.errors import FieldError
from src.gf.field import FieldSpec, build_field

logger = logging.getLogger(__name__)

SELECTOR_PATTERN = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?::\s*([\d\s,]+))?\s*$')


def load_field_catalog(path: Optional[Union[str, Path]] = None) -> Dict[str, dict]:
    """
    Load named field definitions.

    Args:
        path: YAML file with a top-level `fields` mapping; defaults to the configured catalogue
    Returns: Dict of name -> {'p', 'm', 'modulus', 'description'}
    """
    path = Path(path) if path is not None else config.FIELDS_CONFIG_PATH
    if not path.exists():
        logger.warning(f"Field catalogue not found: {path}")
        return {}

    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}

    catalog = {}
    for name, entry in (data.get('fields') or {}).items():
        if 'p' not in entry:
            raise FieldError(f"field '{name}' in {path} has no 'p' key")
        catalog[str(name)] = {
            'p': int(entry['p']),
            'm': int(entry.get('m', 1)),
            'modulus': entry.get('modulus'),
            'description': entry.get('description', ''),
        }
    logger.debug(f"Loaded {len(catalog)} fields from {path}")
    return catalog


def field_from_selector(selector: str, catalog_path: Optional[Union[str, Path]] = None) -> FieldSpec:
    """
    Resolve a field selector.

    Accepts `p`, `p^m`, `p^m:c0,c1,...,cm` (modulus constant term first) or a
    name from the field catalogue. A bare integer that is a prime power but not
    a prime, such as `8`, is read as that field with its default modulus.
    """
    match = SELECTOR_PATTERN.match(selector)
    if match:
        base = int(match.group(1))
        m = int(match.group(2)) if match.group(2) else 1
        modulus = None
        if match.group(3):
            modulus = [int(c) for c in match.group(3).split(',') if c.strip()]
        if match.group(2) is None and modulus is None:
            base, m = _split_prime_power(base)
        return build_field(base, m, modulus)

    catalog = load_field_catalog(catalog_path)
    if selector not in catalog:
        raise FieldError(f"unknown field selector '{selector}'")
    entry = catalog[selector]
    return build_field(entry['p'], entry['m'], entry['modulus'])


def _split_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            m, rest = 0, q
            while rest % p == 0:
                rest //= p
                m += 1
            return (p, m) if rest == 1 else (q, 1)
    return q, 1
