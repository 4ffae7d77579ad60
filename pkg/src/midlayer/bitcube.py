"""Bit-level primitives for cube vertices.

A bitstring of length m is stored as a plain int with position i (1-based,
leftmost in the textual form) at bit index i-1.  The textual form "110"
therefore parses to 0b011 = 3.  Lengths are passed explicitly wherever an
operation depends on them; the int encoding never leaks into textual I/O.

Alpha vectors are tuples of 0/1 ints.  A parameter sequence is a tuple of
alpha vectors, the i-th of length i-1, serialized as comma-separated
bitstrings (",0,10" encodes ((), (0,), (1,0))).
"""

from __future__ import annotations

AlphaVector = tuple[int, ...]
ParameterSequence = tuple[AlphaVector, ...]


def weight(x: int) -> int:
    """Number of 1-bits."""
    return x.bit_count()


def invert(x: int, m: int) -> int:
    return x ^ ((1 << m) - 1)


def reverse(x: int, m: int) -> int:
    """Reverse the positions 1..m of x."""
    if x >> m:
        raise ValueError(f"value {x:#x} does not fit in {m} bits")
    if m == 0:
        return 0
    return int(format(x, f"0{m}b")[::-1], 2)


def reverse_invert(x: int, m: int) -> int:
    """Position-reversed bitwise complement; maps weight k to m-k."""
    return invert(reverse(x, m), m)


def concat(x: int, mx: int, y: int) -> int:
    """x followed by y, where x occupies positions 1..mx."""
    return x | (y << mx)


def pi_alpha(alpha: AlphaVector, x: int) -> int:
    """Swap bits at positions 2i and 2i+1 for every i with alpha(i)=1.

    x must be a bitstring of length 2*(len(alpha)+1); positions 1 and 2n
    are always fixed.  An involution.
    """
    n = len(alpha) + 1
    if x >> (2 * n):
        raise ValueError(f"expected a bitstring of length {2 * n}")
    for i, a in enumerate(alpha, start=1):
        if a:
            lo = 2 * i - 1  # bit index of position 2i
            if ((x >> lo) ^ (x >> (lo + 1))) & 1:
                x ^= 3 << lo
    return x


def f_alpha(alpha: AlphaVector, x: int) -> int:
    """Swap-pairs, then reverse and complement.

    Carries bitstrings of length 2n and weight k to weight 2n-k, and is an
    isomorphism between the layers (n,n+1) and (n-1,n) of the 2n-cube.
    """
    n = len(alpha) + 1
    return reverse_invert(pi_alpha(alpha, x), 2 * n)


def tau_alpha(alpha_prime: AlphaVector, x: int) -> int:
    """Apply f_alpha to the first 2n bits and complement the last one.

    x must have length 2n+1 with n = len(alpha_prime)+1.  An automorphism
    of the middle layer of the (2n+1)-cube.
    """
    n = len(alpha_prime) + 1
    m = 2 * n
    if x >> (m + 1):
        raise ValueError(f"expected a bitstring of length {m + 1}")
    low = x & ((1 << m) - 1)
    top = (x >> m) & 1
    return f_alpha(alpha_prime, low) | ((top ^ 1) << m)


def is_adjacent(u: int, v: int) -> bool:
    """True iff u and v differ in exactly one bit."""
    return (u ^ v).bit_count() == 1


# --- textual formats ---------------------------------------------------------

def parse_bits(text: str) -> tuple[int, int]:
    """Parse "110" (leftmost char = position 1) to (value, length)."""
    if text and set(text) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {text!r}")
    return (int(text[::-1], 2) if text else 0, len(text))


def format_bits(x: int, m: int) -> str:
    if x >> m:
        raise ValueError(f"value {x:#x} does not fit in {m} bits")
    return format(x, f"0{m}b")[::-1] if m else ""


def parse_alpha(text: str) -> AlphaVector:
    if set(text) - {"0", "1"}:
        raise ValueError(f"not an alpha vector: {text!r}")
    return tuple(int(c) for c in text)


def format_alpha(alpha: AlphaVector) -> str:
    return "".join(str(a) for a in alpha)


def parse_sequence(text: str) -> ParameterSequence:
    """Parse ",0,10" to ((), (0,), (1,0)).  The i-th field must have length i-1."""
    alphas = tuple(parse_alpha(field) for field in text.split(","))
    for i, a in enumerate(alphas, start=1):
        if len(a) != i - 1:
            raise ValueError(
                f"alpha vector {i} has length {len(a)}, expected {i - 1}"
            )
    return alphas


def format_sequence(alphas: ParameterSequence) -> str:
    return ",".join(format_alpha(a) for a in alphas)
