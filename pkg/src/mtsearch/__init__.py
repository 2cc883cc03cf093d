"""Minimax game-tree search: Alpha-Beta family, MT/MTD drivers, SSS*, minimal graphs."""
