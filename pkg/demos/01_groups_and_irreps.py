"""Build small groups, inspect their structure, and split the regular
representation into irreducible unitary blocks.

Run with:  python demos/01_groups_and_irreps.py
"""

import numpy as np

import fourierdist as fd

# Groups come in as dense multiplication tables with the identity at index 0.
z6 = fd.make_cyclic(6)
s3 = fd.make_symmetric(3)
q8 = fd.make_quaternion()

print("corpus member   order  abelian  element orders")
for g in (z6, s3, fd.make_dihedral(4), q8, fd.parse_group_spec("Z2xZ4")):
    print(f"  {g.label:12s}  {g.order:4d}  {str(g.is_abelian()):7s} "
          f"{g.element_orders().tolist()}")

# Z6 and S3 have the same order but are not isomorphic; Z2 x Z3 is cyclic.
print("\nZ6 ~ S3?", fd.are_isomorphic(z6, s3)[0])
prod = fd.make_direct_product(fd.make_cyclic(2), fd.make_cyclic(3))
ok, witness = fd.are_isomorphic(prod, z6)
print("Z2xZ3 ~ Z6?", ok, "witness:", witness)

# The irreducible blocks of the regular representation.  A random Hermitian
# matrix averaged over conjugation by translations commutes with the whole
# representation; its eigenspaces are the irreducible invariant subspaces.
for g in (z6, s3, q8):
    table = fd.irreps_of(g, seed=0)
    print(f"\n{g.label}: block dimensions {table.dims} "
          f"(sum of squares = {sum(d * d for d in table.dims)} = |G|)")
    ct = fd.character_table(table)
    with np.printoptions(precision=3, suppress=True):
        print("character table (rows = blocks, columns = conjugacy classes):")
        print(ct)
