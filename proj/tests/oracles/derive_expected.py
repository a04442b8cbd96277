"""Independent oracle for the frozen expected values in the C++ tests.

Uses only exact integer binomials (math.comb) and literal definitions:
digits, the class definition by max/inf over digit positions, and the
nucleus basis condition binom(m, j) = 0 mod p for all m in k+1..n.
"""
from math import comb


def digits(x, p):
    out = []
    while x:
        out.append(x % p)
        x //= p
    return out


def dg(d, k):
    return d[k] if k < len(d) else 0


def class_label(n, j, p):
    if comb(n, j) % p != 0 if j <= n else False:
        return None
    nd, jd = digits(n, p), digits(j, p)
    size = max(len(nd), len(jd))
    Ls = [k for k in range(size) if dg(jd, k) > dg(nd, k)]
    if not Ls:
        return None
    L = max(Ls)
    cand = [k for k in range(L + 1, size + 1) if dg(jd, k) < dg(nd, k)]
    return (min(cand) if cand else "inf", L)


def members(i, n, p, bound):
    return [j for j in range(bound + 1) if (lab := class_label(n, j, p)) and lab[0] == i]


def top_line(R, b, p):
    bd = digits(b, p)
    return b - sum(dg(bd, k) * p**k for k in range(R))


def basis_indices(k, n, p):
    return [j for j in range(n + 1) if all(comb(m, j) % p == 0 for m in range(k + 1, n + 1))]


def dim_table(n, p):
    last_nz = [max(m for m in range(j, n + 1) if comb(m, j) % p) for j in range(n + 1)]
    return {k: sum(1 for j in range(n + 1) if last_nz[j] < k + 1) - 1 for k in range(-1, n)}


if __name__ == "__main__":
    print("digits 305/3", digits(305, 3), "306/3", digits(306, 3))
    print("class_of(3,1,3)", class_label(3, 1, 3))
    print("class_of(9,3,3)", class_label(9, 3, 3))
    print("class_of(2,5,7)", class_label(2, 5, 7))
    print("phi(1,3,3)", len(members(1, 3, 3, 3)), "phi(2,9,3)", len(members(2, 9, 3, 9)))
    print("members(1,3,3,3)", members(1, 3, 3, 3))
    print("members(2,9,3,9)", members(2, 9, 3, 9))
    print("members(1,2,2,2)", members(1, 2, 2, 2))
    print("members(1,4,2,4)", members(1, 4, 2, 4), "members(2,4,2,4)", members(2, 4, 2, 4))
    print("T(4,306,3)", top_line(4, 306, 3), "T(3,306,3)", top_line(3, 306, 3))
    zs = [j for j in range(306) if comb(305, j) % 3 == 0]
    print("sigma(1,305,3) = #zeros", len(zs))
    print("sigma(4,305,3)", sum(1 for j in zs if class_label(305, j, 3)[0] >= 4))
    print("max member (2,9,3)", max(members(2, 9, 3, 9)), "(1,3,3)", max(members(1, 3, 3, 3)))
    t305 = dim_table(305, 3)
    print("dim(296/300/242, 305, 3)", t305[296], t305[300], t305[242])
    runs = []
    for k in range(-1, 305):
        if not runs or runs[-1][2] != t305[k]:
            runs.append([k + 1, k + 2, t305[k]])
        else:
            runs[-1][1] = k + 2
    print("table 305/3 (k+1 bounds, dim)", runs)
    t4 = dim_table(4, 2)
    print("dims n=4 p=2", [t4[k] for k in range(-1, 4)], "basis(3,4,2)", basis_indices(3, 4, 2))
    print("basis(1,2,2)", basis_indices(1, 2, 2))
    print("dims n=16 p=3", sorted(set(dim_table(16, 3).values())))
    print("binom(4,2)%2", comb(4, 2) % 2, "binom(5,2)%3", comb(5, 2) % 3)
