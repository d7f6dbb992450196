"""RCC8 relation algebra: base relations, converse, RCC5 mapping, composition."""
from __future__ import annotations

import enum
from typing import FrozenSet, Iterable, List, Tuple


class Rcc8(enum.IntEnum):
    DC = 0
    EC = 1
    PO = 2
    TPP = 3
    NTPP = 4
    TPPi = 5
    NTPPi = 6
    EQ = 7

    @property
    def bit(self) -> int:
        return 1 << self.value

    @classmethod
    def parse(cls, name: str) -> "Rcc8":
        for rel in cls:
            if rel.name.lower() == name.strip().lower():
                return rel
        raise ValueError(f"unknown RCC8 relation: {name!r}")


class Rcc5(enum.IntEnum):
    DR = 0
    PO = 1
    PP = 2
    PPi = 3
    EQ = 4


ALL = 0xFF
EMPTY = 0

_CONVERSE = {
    Rcc8.DC: Rcc8.DC, Rcc8.EC: Rcc8.EC, Rcc8.PO: Rcc8.PO, Rcc8.EQ: Rcc8.EQ,
    Rcc8.TPP: Rcc8.TPPi, Rcc8.TPPi: Rcc8.TPP, Rcc8.NTPP: Rcc8.NTPPi, Rcc8.NTPPi: Rcc8.NTPP,
}

_TO_RCC5 = {
    Rcc8.DC: Rcc5.DR, Rcc8.EC: Rcc5.DR, Rcc8.PO: Rcc5.PO,
    Rcc8.TPP: Rcc5.PP, Rcc8.NTPP: Rcc5.PP, Rcc8.TPPi: Rcc5.PPi, Rcc8.NTPPi: Rcc5.PPi,
    Rcc8.EQ: Rcc5.EQ,
}

_RCC5_CONVERSE = {Rcc5.DR: Rcc5.DR, Rcc5.PO: Rcc5.PO, Rcc5.EQ: Rcc5.EQ, Rcc5.PP: Rcc5.PPi, Rcc5.PPi: Rcc5.PP}


def converse(r: Rcc8) -> Rcc8:
    return _CONVERSE[r]


def to_rcc5(r: Rcc8) -> Rcc5:
    return _TO_RCC5[r]


def rcc5_converse(r: Rcc5) -> Rcc5:
    return _RCC5_CONVERSE[r]


# Composition table of Randell, Cui and Cohn / Cohn et al.: row R(a,b), column
# S(b,c), cell = possible R(a,c). "*" is the universal relation.
_TABLE_TEXT = """
      | DC               | EC                 | PO               | TPP              | NTPP             | TPPi             | NTPPi            | EQ
DC    | *                | DC EC PO TPP NTPP  | DC EC PO TPP NTPP| DC EC PO TPP NTPP| DC EC PO TPP NTPP| DC               | DC               | DC
EC    | DC EC PO TPPi NTPPi | DC EC PO TPP TPPi EQ | DC EC PO TPP NTPP | EC PO TPP NTPP | PO TPP NTPP | DC EC | DC | EC
PO    | DC EC PO TPPi NTPPi | DC EC PO TPPi NTPPi | * | PO TPP NTPP | PO TPP NTPP | DC EC PO TPPi NTPPi | DC EC PO TPPi NTPPi | PO
TPP   | DC | DC EC | DC EC PO TPP NTPP | TPP NTPP | NTPP | DC EC PO TPP TPPi EQ | DC EC PO TPPi NTPPi | TPP
NTPP  | DC | DC | DC EC PO TPP NTPP | NTPP | NTPP | DC EC PO TPP NTPP | * | NTPP
TPPi  | DC EC PO TPPi NTPPi | EC PO TPPi NTPPi | PO TPPi NTPPi | PO TPP TPPi EQ | PO TPP NTPP | TPPi NTPPi | NTPPi | TPPi
NTPPi | DC EC PO TPPi NTPPi | PO TPPi NTPPi | PO TPPi NTPPi | PO TPPi NTPPi | PO TPP NTPP TPPi NTPPi EQ | NTPPi | NTPPi | NTPPi
EQ    | DC | EC | PO | TPP | NTPP | TPPi | NTPPi | EQ
"""


def _parse_table(text: str) -> Tuple[Tuple[int, ...], ...]:
    rows = [line for line in text.strip().splitlines()][1:]
    table: List[Tuple[int, ...]] = []
    for idx, line in enumerate(rows):
        name, *cells = [c.strip() for c in line.split("|")]
        if Rcc8.parse(name) != idx or len(cells) != 8:
            raise AssertionError(f"malformed composition table row {name}")
        table.append(tuple(ALL if cell == "*" else to_bits(Rcc8.parse(t) for t in cell.split())
                           for cell in cells))
    return tuple(table)


def to_bits(relations: Iterable[Rcc8]) -> int:
    bits = 0
    for r in relations:
        bits |= 1 << int(r)
    return bits


def from_bits(bits: int) -> FrozenSet[Rcc8]:
    return frozenset(r for r in Rcc8 if bits >> int(r) & 1)


def names(bits: int) -> List[str]:
    return [r.name for r in Rcc8 if bits >> int(r) & 1]


COMPOSITION: Tuple[Tuple[int, ...], ...] = _parse_table(_TABLE_TEXT)


def compose(r: Rcc8, s: Rcc8) -> FrozenSet[Rcc8]:
    """Possible relations between a and c given r(a, b) and s(b, c)."""
    return from_bits(COMPOSITION[r][s])


def converse_bits(bits: int) -> int:
    out = 0
    for r in Rcc8:
        if bits >> int(r) & 1:
            out |= 1 << int(_CONVERSE[r])
    return out


def _build_set_table() -> bytes:
    # table[R*256 + S] = union of COMPOSITION cells over r in R, s in S
    single = [[0] * 256 for _ in range(8)]
    for r in range(8):
        row = single[r]
        for s_bits in range(1, 256):
            low = s_bits & -s_bits
            row[s_bits] = row[s_bits ^ low] | COMPOSITION[r][low.bit_length() - 1]
    table = bytearray(256 * 256)
    for r_bits in range(1, 256):
        low = r_bits & -r_bits
        prev = (r_bits ^ low) * 256
        base = r_bits * 256
        row = single[low.bit_length() - 1]
        for s_bits in range(256):
            table[base + s_bits] = table[prev + s_bits] | row[s_bits]
    return bytes(table)


SET_COMPOSITION: bytes = _build_set_table()
CONVERSE_BITS: bytes = bytes(converse_bits(b) for b in range(256))


def compose_set(r_bits: int, s_bits: int) -> int:
    """Bitset composition: union of base compositions over both sets."""
    return SET_COMPOSITION[(r_bits << 8) | s_bits]


def compose_sets(rs: Iterable[Rcc8], ss: Iterable[Rcc8]) -> FrozenSet[Rcc8]:
    return from_bits(compose_set(to_bits(rs), to_bits(ss)))


def deterministic_chains() -> List[Tuple[Rcc8, Rcc8, Rcc8]]:
    """Every (r, s, t) with compose(r, s) == {t}, in table order."""
    out = []
    for r in Rcc8:
        for s in Rcc8:
            cell = COMPOSITION[r][s]
            if cell and cell & (cell - 1) == 0:
                out.append((r, s, Rcc8(cell.bit_length() - 1)))
    return out
