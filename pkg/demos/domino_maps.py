"""Domino plane partitions and the maps between them.

Theta turns a rho-tilde invariant CSPP into a twisted domino plane partition,
Delta turns a gamma-tilde invariant one into a row-even domino plane
partition, and Phi splits a domino plane partition into a pair of
column-strict plane partitions.
"""

from planepart.cspp import Cspp, invariants_of
from planepart.domino import delta, phi, stat_Ubar_domino, stat_Ubar_pair, theta


def main():
    c = Cspp(8, 0, [[7, 4, 4, 3, 2, 1, 1], [6, 3, 2, 1], [5, 2], [2, 1], [1]])
    print("a rho-tilde invariant CSPP and its image under Theta:")
    print(c.to_ascii())
    print(theta(c).to_ascii())

    g = Cspp(11, 0, [[7, 7, 6, 6, 3, 2, 1, 1], [5, 5, 4, 3, 1], [4, 3, 2, 2], [1, 1]])
    d = delta(g)
    print("\na gamma-tilde invariant CSPP_11 goes to RDPP_9:")
    print(d.to_ascii())

    p = phi(d)
    print("\nPhi splits it by domino colour:")
    print(p.to_ascii())
    print("shapes differ by a horizontal strip:", p.is_hpcspp())
    print("Ubar_1 kept:", stat_Ubar_domino(d, 1) == stat_Ubar_pair(p, 1))

    print("\nsizes of the invariant sets for n = 3, 5, 7:")
    for n in (3, 5, 7):
        print(f"  n={n}: rho-tilde {len(invariants_of(n, 0, 'rho_tilde'))}, gamma-tilde {len(invariants_of(n, 0, 'gamma_tilde'))}")


if __name__ == "__main__":
    main()
