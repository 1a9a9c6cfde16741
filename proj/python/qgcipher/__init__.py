"""Python bindings for the qgcipher image cipher."""

from ._core import (
    TWO_PI,
    Error,
    ImageFormatError,
    IoError,
    KeyFormatError,
    KeyParameters,
    MapState,
    Quasigroup,
    SecretKey,
    ValidationError,
    adjacent_correlations,
    box_index,
    channel_correlations,
    channel_entropies,
    decrypt,
    encrypt,
    entropy,
    expected_npcr,
    expected_uaci,
    gen_perm_boxes,
    generate_key,
    mutual_information,
    npcr,
    parse_key,
    portable_sin,
    reshape_dims,
    serialize_key,
    skip,
    step,
    uaci,
    validate_key,
    validate_latin_square,
    wrap_two_pi,
)

__all__ = [name for name in dir() if not name.startswith("_")]
