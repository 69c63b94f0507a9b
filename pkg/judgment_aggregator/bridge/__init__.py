"""Preference agendas and the classical voting rules they reduce to."""

from .preferences import (
    PreferenceProfile,
    build_preference_agenda,
    decode_order,
    decode_orders,
    decode_winners,
    encode,
)

__all__ = [
    "PreferenceProfile",
    "build_preference_agenda",
    "decode_order",
    "decode_orders",
    "decode_winners",
    "encode",
]
