"""Matrices transcribed from the published examples (rows listed top to bottom)."""

# 4 x 15 simplex generator; columns 7, 8, 9 (0-based) are the deleted anticode
G4 = [
    "100011100011101",
    "010010011011011",
    "001001010110111",
    "000100101101111",
]
G4_DELETED = (7, 8, 9)

# 3 x 3 anticode generator of the first example, delta = 2
ANTICODE_3x3 = ["110", "101", "011"]

# parity-check matrix (A^T | I) of the [12, 4, 6] code
H_12_4_6 = [
    "110010000000",
    "101001000000",
    "100100100000",
    "111000010000",
    "110100001000",
    "101100000100",
    "011100000010",
    "111100000001",
]

H_PRIME_12_4_6 = [
    "110010000000",
    "101001000000",
    "100100100000",
    "000100010001",
    "001000001001",
    "010000000101",
    "100000000011",
    "111100000001",
]

# column labels of H^4, one vector per column written top to bottom
H4_COLUMN_VECTORS = [
    "0100", "0101", "0110", "0111",
    "1000", "1001", "1010", "1011",
    "1100", "1101", "1110", "1111",
]

H4 = [
    "100010001000",
    "010000010010",
    "001001000001",
    "000100100100",
    "100001000100",
    "010000100001",
    "001010000010",
    "000100011000",
    "100000100010",
    "010001001000",
    "001000010100",
    "000110000001",
    "100000010001",
    "010010000100",
    "001000101000",
    "000101000010",
]


def vector_to_int(bits: str) -> int:
    """Column vector written top to bottom -> integer with the top entry as bit 0."""
    return sum(1 << i for i, ch in enumerate(bits) if ch == "1")
