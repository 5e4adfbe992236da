"""Unipotent families of Weyl groups and the q -> -q involution on them."""

import json

from ._core import (
    GateError,
    IntegrityError,
    Involutions,
    ScalarRelationError,
    check_tables,
    ring_hom,
    run_cli,
)
from . import _core

__all__ = [
    "GateError",
    "IntegrityError",
    "Involutions",
    "ScalarRelationError",
    "character_table",
    "check_tables",
    "families",
    "hecke_check",
    "pairing_matrix",
    "report",
    "ring_hom",
    "run_cli",
]


def character_table(type_, rank):
    return json.loads(_core.character_table(type_, rank))


def pairing_matrix(n):
    return json.loads(_core.pairing_matrix(n))


def families(type_, rank):
    return json.loads(Involutions(type_, rank).families_json())


def report(type_, rank):
    return json.loads(Involutions(type_, rank).report_json())


def hecke_check(type_, rank, v0="3", gate=3):
    return json.loads(Involutions(type_, rank).hecke_check_json(str(v0), gate))
