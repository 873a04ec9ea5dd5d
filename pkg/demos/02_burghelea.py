"""The conjugacy-class decomposition of HC(kG).

For a finite group G the cyclic homology of the whole group algebra splits
over conjugacy classes: each class contributes the twisted cyclic homology
of the centralizer of a representative.  The comparison runs through the
cyclic set Gamma of tuples whose ordered product lies in the class, and the
map theta from the centralizer module is an exact chain map.

Run:  python3 demos/02_burghelea.py
"""

from hopfcycl import (
    QQ,
    FiniteGroup,
    GammaCyclicModule,
    burghelea_check,
    centralizer,
    conjugacy_classes,
    theta_chain_map_check,
)

G = FiniteGroup.symmetric(3)
print("== S_3: classes and centralizers ==")
for cls_ in conjugacy_classes(G):
    C = centralizer(G, cls_[0])
    labels = ", ".join(G.labels[x] for x in cls_)
    print(f"  class [{labels}]  size {len(cls_)}  centralizer order {C.order}")

print()
print("== the cyclic set Gamma(G, pi) ==")
for cls_ in conjugacy_classes(G):
    gamma = GammaCyclicModule(G, cls_[0], QQ)
    dims = [gamma.level_dim(m) for m in range(3)]
    print(f"  pi = {G.labels[cls_[0]]}: carrier dims {dims}"
          f"  (= |class| * |G|^m)")

print()
print("== theta is a chain map on every operator ==")
for cls_ in conjugacy_classes(G):
    report = theta_chain_map_check(G, cls_[0], 2, QQ)
    bad = [k for k, ok in report.items() if not ok]
    print(f"  pi = {G.labels[cls_[0]]}: {len(report)} squares commute"
          f" {'(all)' if not bad else bad}")

print()
print("== the decomposition, as dimensions ==")
for G, name in ((FiniteGroup.cyclic(2), "Z/2"),
                (FiniteGroup.cyclic(4), "Z/4"),
                (FiniteGroup.symmetric(3), "S_3")):
    out = burghelea_check(G, QQ, 3)
    print(f"  {name}:")
    print(f"    HC(QG)          {out['classical']}")
    for pi, dims in out["per_class"].items():
        print(f"    class of {G.labels[pi]:<4}    {dims}")
    print(f"    sum             {out['sum']}   passed: {out['passed']}")
