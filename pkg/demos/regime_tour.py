"""How the ground state changes as the visual cone narrows.

gamma = 0 is the hard-disc limit (any touching pair bonds); at the diamond
threshold gamma = sqrt(3)/2 the minimizers are rhombic patches; between the
threshold and 1, rows of aligned particles win until the cluster is large
enough to close a ring of size N_gamma = ceil(pi / arccos gamma); at gamma = 1
only perfect rows bond at all.
"""

from ocl.energy import energy, n_gamma
from ocl.search import reference_minimizer

SQRT3_2 = 0.8660254037844386


def main() -> None:
    n = 12
    print(f"reference minimizers for n = {n}:")
    for gamma, note in [
        (0.0, "hard discs: triangular patch"),
        (SQRT3_2, "diamond threshold: rhombic patch"),
        (0.95, f"narrow cone (ring size {n_gamma(0.95)}): closed ring"),
        (1.0, "degenerate cone: straight row"),
    ]:
        c = reference_minimizer(n, gamma)
        print(f"  gamma = {gamma:<10} E = {energy(c, gamma):>4}   {note}")
    print()
    print("ring onset at gamma = 0.95: rows win below N_gamma, rings from there on")
    for n in range(8, 13):
        c = reference_minimizer(n, 0.95)
        print(f"  n = {n:>2}  E = {energy(c, 0.95):>4}")


if __name__ == "__main__":
    main()
