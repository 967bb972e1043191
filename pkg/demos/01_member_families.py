"""
Tour of the permutation families that index the Schubert sums.

The orthogonal base family in S_n is built recursively: working inward from
the outside, each step picks a pair of letters adjacent in the remaining set
and places the larger one in front.  Block assembly then glues base families
along a composition, with letter intervals descending across blocks.
"""

from schubfactor import (
    Composition,
    Permutation,
    block_word,
    standardize,
    symplectic_embedding,
    w_set_full_orthogonal,
    w_set_full_symplectic,
    w_set_orthogonal,
    w_set_symplectic,
)

print("== Orthogonal base families ==")
for n in range(1, 6):
    members = w_set_full_orthogonal(n)
    print(f"n={n}: {len(members):2d} members:", " ".join(str(w) for w in members))

print()
print("Every member pairs positions i and n+1-i with the larger value first:")
w = w_set_full_orthogonal(5)[0]
print(f"  {w}: " + ", ".join(f"w({i})={w(i)} > w({6 - i})={w(6 - i)}" for i in (1, 2)))

print()
print("== Block assembly ==")
mu = Composition((4, 2))
wset = w_set_orthogonal(mu)
print(f"mu = ({mu}), members:", " ".join(str(w) for w in wset.members))
w = wset.members[0]
for i in (1, 2):
    sub = block_word(w, mu, i)
    std = standardize(sub, set(sub))
    print(f"  block {i} of {w}: word {''.join(map(str, sub))} standardizes to {std}")

print()
print("== Symplectic families ==")
print("The doubling embedding sends u in S_n to S_2n:")
for word in ((1, 2), (2, 1)):
    u = Permutation(word)
    print(f"  {u} -> {symplectic_embedding(u)}")
print("Base family for 2n=6:", " ".join(str(w) for w in w_set_full_symplectic(6)))

mu = Composition((2, 4))
print(f"Assembled family for mu = ({mu}):",
      " ".join(str(w) for w in w_set_symplectic(mu).members))
print("(block 1 gets letters {5,6}, block 2 gets {1,2,3,4})")
