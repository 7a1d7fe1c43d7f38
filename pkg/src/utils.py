from typing import List, Sequence, Tuple


def bits_to_int(bits: Sequence[int]) -> int:
    """Pack a bit list into an int, coordinate i at bit i."""
    value = 0
    for i, bit in enumerate(bits):
        if bit:
            value |= 1 << i
    return value


def int_to_bits(value: int, length: int) -> List[int]:
    """Unpack the low `length` bits of value, coordinate i from bit i."""
    if value >> length:
        raise ValueError(f"{value} does not fit in {length} bits")
    return [(value >> i) & 1 for i in range(length)]


def mask(length: int) -> int:
    return (1 << length) - 1


def parity(value: int) -> int:
    return value.bit_count() & 1


def reduced_row_echelon_form(rows: Sequence[int], width: int) -> Tuple[List[int], List[int]]:
    """
    RREF over Z2 of packed rows, scanning columns from bit 0 upwards.

    Returns the nonzero reduced rows and their pivot columns, both in pivot order.
    """
    rows = list(rows)
    pivots = []
    r = 0
    for c in range(width):
        bit = 1 << c
        # Topmost row at or below r with a 1 in column c
        row = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if row is None:
            continue
        rows[r], rows[row] = rows[row], rows[r]

        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]

        pivots.append(c)
        r += 1

    return rows[:r], pivots


def inverse_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(perm)
    for new, old in enumerate(perm):
        inverse[old] = new
    return tuple(inverse)
