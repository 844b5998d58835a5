"""Walkthrough: correcting one deletable error with a VT code.

A deletable error is one of three things happening to a bit: it gets
flipped, erased (visible 'e'), or deleted outright.  The VT code
VT_a(n) keeps the weighted checksum sum(i * x_i) congruent to a mod
n+1, which is enough to undo any single such error -- with one caveat
for flips, shown at the end.
"""

from delcodes import (ErrorPattern, VtParams, apply_pattern, correct_single,
                      vt_best_residue, vt_class_sizes, vt_enumerate,
                      word_to_str)

n = 8
sizes = vt_class_sizes(n)
a, size = vt_best_residue(n)
print(f"VT classes for n = {n}: sizes {sizes}")
print(f"largest class: a = {a} with {size} codewords "
      f"(pigeonhole floor {2 ** n // (n + 1)})")
print()

params = VtParams(n, a)
x = vt_enumerate(params)[17]
print(f"codeword x = {word_to_str(x)}")

for kind, label in (("D", "deletion"), ("E", "erasure"), ("F", "flip")):
    g = ErrorPattern.from_dict(n, {5: kind})
    y = apply_pattern(x, g)
    estimate, ambiguous = correct_single(params, y)
    status = "ok" if estimate == x else "MISMATCH"
    print(f"  {label:9s} at position 5: received {word_to_str(y):9s} "
          f"-> decoded {word_to_str(estimate)}  [{status}"
          f"{', ambiguous' if ambiguous else ''}]")

print()
print("The flip caveat: VT classes contain pairs of words differing at")
print("positions p and n+1-p, so one received word can be a single flip")
print("away from two codewords.  The decoder then flags the ambiguity:")
y = (0, 1, 1, 1)
estimate, ambiguous = correct_single(VtParams(4, 0), y)
print(f"  VT_0(4), received {word_to_str(y)} -> {word_to_str(estimate)}, "
      f"ambiguous = {ambiguous} (0110 and 1111 both qualify)")
