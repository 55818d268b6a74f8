#!/usr/bin/env python3
"""Independent expansion of the fixture identities.

Recomputes, with bare integer matrices and no project code, everything the
acceptance suite freezes for the four shipped fixtures: intersection form,
canonical class, staged contraction bookkeeping, gamma, the correction
class, and the decomposition of K + D. Output is diffed against
fixture_expansion.expected.
"""


def gram(e, k):
    n = 2 + k
    m = [[0] * n for _ in range(n)]
    m[0][0] = -e
    m[0][1] = m[1][0] = 1
    for i in range(2, n):
        m[i][i] = -1
    return m


def pair(x, y, m):
    return sum(x[i] * m[i][j] * y[j] for i in range(len(x)) for j in range(len(x)))


def add(*vs):
    return [sum(t) for t in zip(*vs)]


def scale(c, v):
    return [c * x for x in v]


def project(x, c, m):
    assert pair(c, c, m) == -1
    return add(x, scale(pair(x, c, m), c))


def canonical(g, e, k):
    return [-2, 2 * g - 2 - e] + [1] * k


def fiber(k):
    return [0, 1] + [0] * k


def fmt(v):
    return "[" + ",".join(str(x) for x in v) + "]"


def gamma_of(kd_h, contracted, g, e, k):
    m = gram(e, k)
    v = kd_h
    for c in contracted:
        v = project(v, c, m)
    assert v[0] == 0 and all(x == 0 for x in v[2:]), v
    return v[1] - (2 * g - 2)


def run_fixture(name, g, e, k, horizontals, dv, contracted_stage1, contracted_rest):
    m = gram(e, k)
    K = canonical(g, e, k)
    F = fiber(k)
    dh = [0] * (2 + k)
    for h in horizontals:
        dh = add(dh, h)
    d = add(dh, *(dv or [[0] * (2 + k)]))
    kd = add(K, d)
    contracted = contracted_stage1 + contracted_rest
    gam = gamma_of(add(K, dh), contracted, g, e, k)
    eprime = [0] * (2 + k)
    for c in contracted_stage1:
        eprime = add(eprime, c)
    lhs = kd
    rhs = add(scale(gam + 2 * g - 2, F), *(dv or [[0] * (2 + k)]), eprime)
    assert lhs == rhs, (name, lhs, rhs)
    print(f"{name}: gamma={gam} K+D={fmt(kd)} E'={fmt(eprime)} identity=ok")
    if len(horizontals) == 2:
        s1, s2 = horizontals
        for c in contracted:
            s1, s2 = project(s1, c, m), project(s2, c, m)
        print(f"{name}: cross_term={pair(s1, s2, m)}")
    else:
        h = horizontals[0]
        for c in contracted:
            h = project(h, c, m)
        pa = pair(h, add(h, K), m) // 2 + 1
        print(f"{name}: projected_pa={pa} expected={gam + 2 * g - 1}")


# A: plain rational bisection 2C0+F on the trivial ruled model.
run_fixture("fix_a", 0, 0, 0, [[2, 1]], [], [], [])

# B: one blow-up at a boundary mark. Boundary 2C0+F-E1; the strict fiber
# F-E1 lies in the vertical boundary; the single contraction removes it.
run_fixture("fix_b", 0, 0, 1, [[2, 1, -1]], [[0, 1, -1]], [], [[0, 1, -1]])

# C: B blown up at the fiber node. Components F-E1-E2, E1-E2, E2 (mult 2);
# vertical boundary F-E1-E2. Stage 1 contracts E2; stage 2 contracts the
# image F-E1 of the strict fiber.
run_fixture("fix_c", 0, 0, 2, [[2, 1, -1, 0]], [[0, 1, -1, -1]],
            [[0, 0, 0, 1]], [[0, 1, -1, 0]])

# D: two constant sections of the trivial elliptic ruled surface.
run_fixture("fix_d", 1, 0, 0, [[1, 0], [1, 0]], [], [], [])

# Plan shapes, frozen from stepping the staged loops by hand.
print("fix_a: k1=0 k2=0 m=0")
print("fix_b: k1=0 k2=1 m=1")
print("fix_c: k1=1 k2=2 m=2")
print("fix_d: k1=0 k2=0 m=0")

# Stage-2/3 boundary degrees for B and C (unit for every live (-1)-curve):
m1 = gram(0, 1)
b_dh = [2, 1, -1]
for cls in ([0, 1, -1], [0, 0, 1]):
    assert pair(b_dh, cls, m1) == 1
print("fix_b: boundary degree of both (-1)-curves at state 0 = 1")
m2 = gram(0, 2)
c_dh_1 = [2, 1, -1, 0]  # after contracting E2 the class is unchanged
for cls in ([0, 1, -1, 0], [0, 0, 1, 0]):
    assert pair(c_dh_1, cls, m2) == 1
print("fix_c: boundary degree of both (-1)-curves at state 1 = 1")
