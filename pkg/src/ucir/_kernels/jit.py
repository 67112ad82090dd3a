"""Numba-jitted bitset kernels (single 64-bit word, so n <= 64).

Mirrors :mod:`ucir._kernels.pure` step for step: same branching rule, same
visit order, same strict-improvement updates, hence identical witnesses.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True)
def _full_mask(n):
    if n >= 64:
        return ~_ZERO
    return (_ONE << np.uint64(n)) - _ONE


@njit(cache=True)
def max_independent_set_mask(adj, n):
    best_size = np.int64(0)
    best_mask = _ZERO
    full = _full_mask(n)
    cap = 2 * n + 4
    stack_p = np.empty(cap, np.uint64)
    stack_cur = np.empty(cap, np.uint64)
    stack_size = np.empty(cap, np.int64)
    cliques = np.empty(n, np.uint64)
    stack_p[0] = full
    stack_cur[0] = _ZERO
    stack_size[0] = 0
    top = 1
    while top > 0:
        top -= 1
        p = stack_p[top]
        cur = stack_cur[top]
        size = stack_size[top]
        if size > best_size:
            best_size = size
            best_mask = cur
        if p == _ZERO:
            continue
        ncl = 0
        rem = p
        while rem != _ZERO:
            low = rem & (~rem + _ONE)
            v = _popcount(low - _ONE)
            rem ^= low
            row = adj[v]
            placed = False
            for i in range(ncl):
                if cliques[i] & ~row == _ZERO:
                    cliques[i] |= low
                    placed = True
                    break
            if not placed:
                cliques[ncl] = low
                ncl += 1
        if size + ncl <= best_size:
            continue
        branch = 0
        branch_deg = np.int64(-1)
        rem = p
        while rem != _ZERO:
            low = rem & (~rem + _ONE)
            v = _popcount(low - _ONE)
            rem ^= low
            d = _popcount(adj[v] & p)
            if d > branch_deg:
                branch_deg = d
                branch = v
        vbit = _ONE << np.uint64(branch)
        stack_p[top] = p & ~vbit
        stack_cur[top] = cur
        stack_size[top] = size
        top += 1
        stack_p[top] = p & ~(adj[branch] | vbit)
        stack_cur[top] = cur | vbit
        stack_size[top] = size + 1
        top += 1
    return best_size, best_mask


@njit(cache=True)
def best_ratio_mask(adj, n):
    best_num = np.int64(0)
    best_den = np.int64(1)
    best_mask = _ZERO
    full = _full_mask(n)
    cap = n * (n + 1) // 2 + n + 4
    su = np.empty(cap, np.uint64)
    sn = np.empty(cap, np.uint64)
    sr = np.empty(cap, np.uint64)
    vbits = np.empty(n, np.uint64)
    su[0] = _ZERO
    sn[0] = _ZERO
    sr[0] = full
    top = 1
    while top > 0:
        top -= 1
        u = su[top]
        nbr = sn[top]
        r = sr[top]
        usize = _popcount(u)
        csize = _popcount(nbr)
        if u != _ZERO:
            den = usize + csize
            if usize * best_den > best_num * den:
                best_num = usize
                best_den = den
                best_mask = u
        t = usize + _popcount(r)
        if t == 0 or t * best_den <= best_num * (t + csize):
            continue
        nb = 0
        rem = r
        while rem != _ZERO:
            low = rem & (~rem + _ONE)
            vbits[nb] = low
            nb += 1
            rem ^= low
        for i in range(nb - 1, -1, -1):
            vbit = vbits[i]
            v = _popcount(vbit - _ONE)
            above = full & ~((vbit << _ONE) - _ONE)
            su[top] = u | vbit
            sn[top] = nbr | adj[v]
            sr[top] = r & above & ~adj[v]
            top += 1
    return best_num, best_den, best_mask
