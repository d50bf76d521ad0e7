"""
argparse type converters shared by the command modules.
"""
import argparse
from typing import Tuple

from exteriorcov.models.closedforms import Partition
from exteriorcov.models.rootdata import TYPE_TAGS


def type_tag(text: str) -> str:
    tag = text.strip().upper()
    if tag not in TYPE_TAGS:
        raise argparse.ArgumentTypeError(f"unknown type {text!r}, expected one of {', '.join(TYPE_TAGS)}")
    return tag


def int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
