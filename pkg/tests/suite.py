"""The desk-scale complexes used across the test modules."""
from functools import lru_cache

from cubecyl.generators import (gen_grid, gen_hypercube, gen_random_dual, gen_staircase,
                                gen_tree)
from cubecyl.hyperbolicity import geometry

TREE_PARAMS = [(1, 0), (2, 0), (5, 1), (10, 2), (20, 3), (30, 1), (40, 4), (60, 5)]


@lru_cache(maxsize=None)
def trees():
    return tuple(gen_tree(n, s) for n, s in TREE_PARAMS)


@lru_cache(maxsize=None)
def hypercubes():
    return tuple(gen_hypercube(d) for d in range(1, 7))


@lru_cache(maxsize=None)
def grids():
    return tuple(gen_grid(m, n) for m in range(1, 5) for n in range(1, 5))


@lru_cache(maxsize=None)
def staircases():
    return tuple(gen_staircase(n) for n in range(1, 9))


@lru_cache(maxsize=None)
def duals():
    out = []
    for pairs in range(4, 13):
        for seed in range(3):
            for q in (0.3, 0.5, 0.7):
                C = gen_random_dual(pairs, seed, q)
                if C.n <= 120:
                    out.append(C)
    return tuple(out)


@lru_cache(maxsize=None)
def hyperbolic_duals():
    return tuple(C for C in duals() if geometry(C).grid_D <= 2)


def hyperbolic():
    return trees() + hypercubes() + staircases() + hyperbolic_duals()


def everything():
    return trees() + hypercubes() + grids() + staircases() + duals()


def small(limit=30):
    return tuple(C for C in everything() if C.n <= limit)
