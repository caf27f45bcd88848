"""Flips on TSPPs and the twisted Bender-Knuth moves they correspond to.

A restricted column-strict plane partition is sent to a TSPP, a diagonal flip
is applied there, and the same result is reached by a TBK move on the CSPP
side before mapping.
"""

from planepart.cspp import Cspp, gamma_bij, stat_Ubar, tbk
from planepart.tspp import pi_r
from planepart.tspp import stat_Ubar as tspp_Ubar


def show(title, obj):
    print(title)
    print(obj.to_ascii())
    print()


def main():
    c = Cspp(8, 0, [[6, 6, 4, 4, 3, 1, 1], [5, 3, 3, 2, 1], [3, 2, 2, 1], [1, 1]])
    show("c (saturated parts starred):", c)
    b = gamma_bij(c)
    show("Gamma(c):", b)

    print("Ubar_r on both sides:")
    for r in range(1, c.N + 1):
        print(f"  r={r}: {stat_Ubar(c, r)} {tspp_Ubar(b, r)}")
    print()

    r = 3
    left = gamma_bij(tbk(c, r))
    right = pi_r(b, r)
    show(f"tbk_{r} then Gamma:", left)
    print(f"equal to pi_{r}(Gamma(c)): {left == right}")
    print(f"tbk_{r} twice gives c back: {tbk(tbk(c, r), r) == c}")


if __name__ == "__main__":
    main()
