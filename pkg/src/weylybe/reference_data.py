"""Hand-transcribed reference pictures for B2 under the ordering a < aba < bab < b.

Letters: a = s_1 (short simple root), b = s_2 (long simple root).  Words are
products read left to right, so "ba" means b*a.  Labels: 1 = a, 2 = aba,
3 = bab, 4 = b.
"""

B2_LETTERS = "ab"

# (source, target, label); down-directed edges listed separately
B2_DIGRAPH_UP = [
    ("e", "a", 1), ("e", "b", 4),
    ("a", "ba", 4), ("a", "ab", 2),
    ("b", "ab", 1), ("b", "ba", 3),
    ("ba", "aba", 1), ("ba", "bab", 2),
    ("ab", "bab", 4), ("ab", "aba", 3),
    ("aba", "abab", 4), ("bab", "abab", 1),
]

B2_DIGRAPH_DOWN = [
    ("a", "e", 1), ("b", "e", 4),
    ("ba", "a", 4), ("ab", "b", 1),
    ("aba", "ba", 1), ("bab", "ab", 4),
    ("abab", "aba", 4), ("abab", "bab", 1),
    ("bab", "e", 3), ("abab", "a", 3),
]

# interval from ab up to a: (lower, upper, label)
B2_INTERVAL_AB_A = [
    ("ab", "b", 1), ("ab", "aba", 3), ("ab", "bab", 4),
    ("b", "ba", 3), ("b", "e", 4),
    ("aba", "ba", 1), ("aba", "abab", 4),
    ("bab", "e", 3), ("bab", "abab", 1),
    ("ba", "a", 4), ("e", "a", 1), ("abab", "a", 3),
]

# interval from the longest element down to e
B2_INTERVAL_W0_E = [
    ("abab", "a", 3), ("abab", "bab", 1),
    ("a", "e", 1), ("bab", "e", 3),
]

# tilted order from a
B2_ORDER_FROM_A = [
    ("a", "ba", 4), ("a", "ab", 2), ("a", "e", 1),
    ("ba", "aba", 1), ("ba", "bab", 2),
    ("ab", "aba", 3), ("ab", "bab", 4), ("ab", "b", 1),
    ("e", "b", 4),
    ("aba", "abab", 4), ("bab", "abab", 1),
]
