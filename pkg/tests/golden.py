"""Reference traces for the 16-leaf example tree.

Nodes are named by letters; ``LETTER_PATH`` maps them to child-index
paths. Each row of ``SSS_TABLE`` is (operation number, node operated on,
case, OPEN list after the operation as ``<node><L|S><merit>``).
"""

LETTER_PATH = {
    "a": (), "b": (0,), "c": (0, 0), "d": (0, 0, 0), "e": (0, 0, 0, 0), "n": (0, 0, 0, 1),
    "f": (0, 0, 1), "g": (0, 0, 1, 0), "h": (1,), "i": (1, 0), "j": (1, 0, 0),
    "k": (1, 0, 0, 0), "l": (1, 0, 1), "m": (1, 0, 1, 0), "o": (1, 0, 1, 1), "p": (1, 1),
    "q": (1, 1, 0), "r": (1, 1, 1), "s": (1, 1, 0, 0), "t": (1, 1, 0, 1),
}

SSS_TABLE = [
    (1, "a", 6, "bL+inf hL+inf"),
    (2, "b", 5, "cL+inf hL+inf"),
    (3, "c", 6, "dL+inf fL+inf hL+inf"),
    (4, "d", 5, "eL+inf fL+inf hL+inf"),
    (5, "e", 4, "fL+inf hL+inf eS41"),
    (6, "f", 5, "gL+inf hL+inf eS41"),
    (7, "g", 4, "hL+inf eS41 gS12"),
    (8, "h", 5, "iL+inf eS41 gS12"),
    (9, "i", 6, "jL+inf lL+inf eS41 gS12"),
    (10, "j", 5, "kL+inf lL+inf eS41 gS12"),
    (11, "k", 4, "lL+inf eS41 gS12 kS10"),
    (12, "l", 5, "mL+inf eS41 gS12 kS10"),
    (13, "m", 4, "eS41 mS36 gS12 kS10"),
    (14, "e", 2, "nL41 mS36 gS12 kS10"),
    (15, "n", 4, "mS36 gS12 kS10 nS5"),
    (16, "m", 2, "oL36 gS12 kS10 nS5"),
    (17, "o", 4, "oS35 gS12 kS10 nS5"),
    (18, "o", 3, "lS35 gS12 kS10 nS5"),
    (19, "l", 1, "iS35 gS12 nS5"),
    (20, "i", 2, "pL35 gS12 nS5"),
    (21, "p", 6, "qL35 rL35 gS12 nS5"),
    (22, "q", 5, "sL35 rL35 gS12 nS5"),
    (23, "s", 4, "sS35 rL35 gS12 nS5"),
    (24, "s", 2, "tL35 rL35 gS12 nS5"),
    (25, "t", 4, "tS35 rL35 gS12 nS5"),
    (26, "t", 3, "qS35 rL35 gS12 nS5"),
    (27, "q", 1, "pS35 gS12 nS5"),
    (28, "p", 3, "hS35 gS12 nS5"),
    (29, "h", 1, "aS35"),
]

AB_LEAVES = [41, 5, 12, 90, 101, 80, 10, 36, 35, 50, 36]
SSS_LEAVES = [41, 12, 10, 36, 5, 35, 50, 36]
MT_SSS_BOUNDS = ["+inf", "41", "36", "35"]
FIXTURE_VALUE = 35
FIXTURE_MINIMAL_TREE_LEAVES = 7


def entry_code(entry, letters={v: k for k, v in LETTER_PATH.items()}) -> str:
    """``OpenEntry`` -> ``<letter><state><merit>`` as used in ``SSS_TABLE``."""
    from mtsearch.stats import fmt_value
    return f"{letters[entry.path]}{entry.state}{fmt_value(entry.merit)}"
