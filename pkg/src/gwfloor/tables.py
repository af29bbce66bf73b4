"""Known beta presentations of the low-degree counts.

Each entry maps s to (h_coeff, beta_coeffs c_1..c_s, one_coeff).  These
are the published values for the five toric del Pezzo families at small
degree; the verify command and the acceptance suite reproduce them from
scratch.
"""

KNOWN_COUNTS: dict[str, dict[int, tuple[int, tuple[int, ...], int]]] = {
    "p2:3": {
        0: (2, (), 8),
        1: (2, (1,), 6),
        2: (2, (1, 0), 4),
        3: (2, (1, 0, 0), 2),
        4: (2, (1, 0, 0, 0), 0),
    },
    "p2:4": {
        0: (190, (), 240),
        1: (190, (48,), 144),
        2: (190, (32, 8), 80),
        3: (190, (20, 6, 1), 40),
        4: (190, (12, 4, 1, 0), 16),
        5: (190, (8, 2, 1, 0, 0), 0),
    },
    "p1xp1:2,2": {
        0: (2, (), 8),
        1: (2, (1,), 6),
        2: (2, (1, 0), 4),
        3: (2, (1, 0, 0), 2),
    },
    "p1xp1:2,3": {
        0: (24, (), 48),
        1: (24, (8,), 32),
        2: (24, (6, 1), 20),
        3: (24, (4, 1, 0), 12),
        4: (24, (2, 1, 0, 0), 8),
    },
    "p1xp1:2,4": {
        0: (192, (), 256),
        1: (192, (48,), 160),
        2: (192, (32, 8), 96),
        3: (192, (20, 6, 1), 56),
        4: (192, (12, 4, 1, 0), 32),
        5: (192, (8, 2, 1, 0, 0), 16),
    },
    "p1xp1:2,5": {
        0: (1280, (), 1280),
        1: (1280, (256,), 768),
        2: (1280, (160, 48), 448),
        3: (1280, (96, 32, 8), 256),
        4: (1280, (56, 20, 6, 1), 144),
        5: (1280, (32, 12, 4, 1, 0), 80),
        6: (1280, (16, 8, 2, 1, 0, 0), 48),
    },
    "bl1:3,1": {
        0: (2, (), 8),
        1: (2, (1,), 6),
        2: (2, (1, 0), 4),
        3: (2, (1, 0, 0), 2),
    },
    "bl1:4,2": {
        0: (24, (), 48),
        1: (24, (8,), 32),
        2: (24, (6, 1), 20),
        3: (24, (4, 1, 0), 12),
        4: (24, (2, 1, 0, 0), 8),
    },
    "bl2:4,2,2": {
        0: (2, (), 8),
        1: (2, (1,), 6),
        2: (2, (1, 0), 4),
        3: (2, (1, 0, 0), 2),
    },
    "bl2:4,2,1": {
        0: (24, (), 48),
        1: (24, (8,), 32),
        2: (24, (6, 1), 20),
        3: (24, (4, 1, 0), 12),
        4: (24, (2, 1, 0, 0), 8),
    },
    "bl2:4,1,1": {
        0: (160, (), 240),
        1: (160, (48,), 144),
        2: (160, (32, 8), 80),
        3: (160, (20, 6, 1), 40),
        4: (160, (12, 4, 1, 0), 16),
    },
    "bl3:3,1,1,1": {
        0: (2, (), 8),
        1: (2, (1,), 6),
        2: (2, (1, 0), 4),
    },
    "bl3:4,1,1,2": {
        0: (24, (), 48),
        1: (24, (8,), 32),
        2: (24, (6, 1), 20),
        3: (24, (4, 1, 0), 12),
    },
}

# Complex counts stated alongside the tables.
KNOWN_COMPLEX = {
    "p1xp1:2,3": 96,
    "p1xp1:2,4": 640,
    "p1xp1:2,5": 3840,
}

QUICK_SPECS = [
    "p2:2", "p2:3", "p1xp1:2,2", "p1xp1:2,3", "bl1:3,1", "bl1:4,2",
    "bl2:4,2,2", "bl2:4,2,1", "bl2:4,1,1", "bl3:3,1,1,1", "bl3:4,1,1,2",
]
FULL_EXTRA_SPECS = ["p2:4", "p1xp1:2,4", "p1xp1:2,5"]
