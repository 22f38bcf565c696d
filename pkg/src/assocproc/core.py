"""Data model shared by the processor modules: alphabet, etalons, classes,
control words and the JSON configuration document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


class ConfigError(Exception):
    """Base class for configuration problems."""


class SchemaError(ConfigError):
    """The document is not shaped like a configuration."""


class ValidationError(ConfigError):
    """A well-formed document violates an invariant.

    ``field`` names the offending part of the document.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def check_symbol(token: Any, where: str) -> str:
    if not isinstance(token, str) or not token:
        raise ValidationError(where, f"symbol must be a non-empty string, got {token!r}")
    if any(ch.isspace() for ch in token):
        raise ValidationError(where, f"symbol {token!r} contains whitespace")
    return token


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        for s in symbols:
            check_symbol(s, "alphabet")
        if len(set(symbols)) != len(symbols):
            dupes = sorted({s for s in symbols if symbols.count(s) > 1})
            raise ValidationError("alphabet", f"duplicate symbols {dupes}")
        object.__setattr__(self, "index", {s: i for i, s in enumerate(symbols, 1)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.index


def decode(symbol: str, alphabet: Alphabet) -> Optional[int]:
    """Unary decoder: 1-based output line for ``symbol``, or None when no
    line is activated (symbol outside the alphabet)."""
    return alphabet.index.get(symbol)


@dataclass(frozen=True)
class ClassLabel:
    name: str
    id: int


@dataclass(frozen=True)
class EtalonSet:
    name: str
    class_label: ClassLabel
    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValidationError(f"etalons.{self.name}", "etalon has no symbols")

    @property
    def length(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class ControlWord:
    bits: str

    def __post_init__(self):
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValueError(f"control word must be a bit string, got {self.bits!r}")

    @property
    def width(self) -> int:
        return len(self.bits)

    def __int__(self) -> int:
        return int(self.bits, 2)

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True)
class ProcessorConfig:
    alphabet: Alphabet
    etalons: tuple[EtalonSet, ...]
    classes: tuple[ClassLabel, ...]
    control_table: dict[ClassLabel, ControlWord]
    word_width: int
    correction_enabled: bool = True
    fuzzifier_spec: Optional[tuple] = None  # tuple of fuzzifier.LinguisticVariable

    def class_named(self, name: str) -> ClassLabel:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)


def _require(doc: dict, key: str, kind, where: str = ""):
    if key not in doc:
        raise SchemaError(f"missing key {where}{key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise SchemaError(f"{where}{key!r} must be int")
    if not isinstance(value, kind):
        name = getattr(kind, "__name__", str(kind))
        raise SchemaError(f"{where}{key!r} must be {name}, got {type(value).__name__}")
    return value


def config_from_dict(doc: Any) -> ProcessorConfig:
    if not isinstance(doc, dict):
        raise SchemaError("configuration must be a JSON object")

    raw_alphabet = _require(doc, "alphabet", list)
    alphabet = Alphabet(tuple(raw_alphabet))

    word_width = _require(doc, "word_width", int)
    if word_width < 1:
        raise ValidationError("word_width", "must be >= 1")
    correction = doc.get("correction", True)
    if not isinstance(correction, bool):
        raise SchemaError("'correction' must be a boolean")

    classes: list[ClassLabel] = []
    for k, entry in enumerate(_require(doc, "classes", list), 1):
        if not isinstance(entry, dict):
            raise SchemaError("each class must be an object")
        name = _require(entry, "name", str, "classes[].")
        if any(c.name == name for c in classes):
            raise ValidationError(f"classes.{name}", "duplicate class name")
        classes.append(ClassLabel(name, k))
    by_name = {c.name: c for c in classes}

    etalons: list[EtalonSet] = []
    raw_etalons = _require(doc, "etalons", list)
    if not raw_etalons:
        raise ValidationError("etalons", "at least one etalon is required")
    for entry in raw_etalons:
        if not isinstance(entry, dict):
            raise SchemaError("each etalon must be an object")
        name = _require(entry, "name", str, "etalons[].")
        where = f"etalons.{name}"
        if any(e.name == name for e in etalons):
            raise ValidationError(where, "duplicate etalon name")
        cls = _require(entry, "class", str, "etalons[].")
        if cls not in by_name:
            raise ValidationError(where, f"unknown class {cls!r}")
        symbols = _require(entry, "symbols", list, "etalons[].")
        if not symbols:
            raise ValidationError(where, "etalon has no symbols")
        for s in symbols:
            check_symbol(s, where)
            if s not in alphabet:
                raise ValidationError(where, f"symbol {s!r} is not in the alphabet")
        etalons.append(EtalonSet(name, by_name[cls], tuple(symbols)))

    raw_table = _require(doc, "control_table", dict)
    table: dict[ClassLabel, ControlWord] = {}
    for name, bits in raw_table.items():
        where = f"control_table.{name}"
        if name not in by_name:
            raise ValidationError(where, "entry for an undeclared class")
        if not isinstance(bits, str) or not bits or set(bits) - {"0", "1"}:
            raise ValidationError(where, f"not a bit string: {bits!r}")
        if len(bits) != word_width:
            raise ValidationError(where, f"width {len(bits)} != word_width {word_width}")
        table[by_name[name]] = ControlWord(bits)
    for c in classes:
        if c not in table:
            raise ValidationError(f"control_table.{c.name}", "missing control word")

    fuzzifier_spec = None
    if doc.get("fuzzifier") is not None:
        from .fuzzifier import variables_from_dict

        fuzzifier_spec = variables_from_dict(doc["fuzzifier"])

    return ProcessorConfig(
        alphabet=alphabet,
        etalons=tuple(etalons),
        classes=tuple(classes),
        control_table=table,
        word_width=word_width,
        correction_enabled=correction,
        fuzzifier_spec=fuzzifier_spec,
    )


def parse_config(text: str) -> ProcessorConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return config_from_dict(doc)


def config_to_dict(config: ProcessorConfig) -> dict:
    doc = {
        "alphabet": list(config.alphabet.symbols),
        "word_width": config.word_width,
        "correction": config.correction_enabled,
        "classes": [{"name": c.name} for c in config.classes],
        "etalons": [
            {"name": e.name, "class": e.class_label.name, "symbols": list(e.symbols)}
            for e in config.etalons
        ],
        "control_table": {c.name: config.control_table[c].bits for c in config.classes},
    }
    if config.fuzzifier_spec is not None:
        from .fuzzifier import variables_to_dict

        doc["fuzzifier"] = variables_to_dict(config.fuzzifier_spec)
    return doc


def serialize_config(config: ProcessorConfig) -> str:
    return json.dumps(config_to_dict(config), indent=2)
