"""Improved bounds quoted without proof for k >= 2 partial spreads.

Each entry: (q, t, r, delta, example_n, example_upper, l_formula) where the
quoted range is l q^t + 1 <= A_q(kt + r, 2t; t) <= l q^t + delta and
l_formula = (a, b, c) encodes the printed l = (q^(tk - a) - q^b)/(q^c - 1).
"""

BULLETS = [
    (2, 4, 3, 4, 11, 132, (1, 3, 4)),
    (2, 6, 4, 8, 16, 1032, (2, 4, 6)),
    (2, 6, 5, 18, 17, 2066, (1, 5, 6)),
    (3, 4, 3, 14, 11, 2201, (1, 3, 4)),
    (3, 5, 3, 13, 13, 6574, (2, 3, 5)),  # printed with exponents 5 and 3 swapped
    (3, 5, 4, 44, 14, 19727, (1, 4, 5)),
    (3, 6, 4, 41, 16, 59090, (2, 4, 6)),
    (3, 6, 5, 133, 17, 177280, (1, 5, 6)),
    (3, 7, 4, 40, 18, 177187, (3, 4, 7)),
    (4, 5, 3, 32, 13, 65568, (2, 3, 5)),
    (4, 6, 3, 30, 15, 262174, (3, 3, 6)),
    (4, 6, 5, 548, 17, 4194852, (1, 5, 6)),
    (4, 7, 4, 128, 18, 4194432, (3, 4, 7)),
    (5, 5, 2, 7, 12, 78132, (3, 2, 5)),
    (5, 5, 4, 329, 14, 1953454, (1, 4, 5)),
    (7, 5, 4, 1246, 14, 40354853, (1, 4, 5)),  # printed as 7^2; 7^4 fits the quoted example
    (8, 4, 3, 264, 11, 2097416, (1, 3, 4)),
    (8, 5, 2, 25, 12, 2097177, (3, 2, 5)),
    (8, 6, 2, 21, 14, 16777237, (4, 2, 6)),
    (9, 3, 2, 41, 8, 59090, (1, 2, 3)),
    (9, 5, 3, 365, 13, 43047086, (2, 3, 5)),
]
