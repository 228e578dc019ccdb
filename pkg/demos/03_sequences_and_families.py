"""The defining recurrence, its integer shadow, the named classical
specializations, and the five-way cross-check.

Run: python3 demos/03_sequences_and_families.py
"""

from fibhess import (
    FAMILIES,
    cross_check,
    f_poly_prefix,
    fib_p_number,
    family_value,
    get_family,
)

print("first terms, p=3:", [str(t) for t in f_poly_prefix(3, 6)])
print("first terms, p=4:", [str(t) for t in f_poly_prefix(4, 7)])
print("integer shadow, p=3:", [fib_p_number(3, n) for n in range(1, 11)])
print()

print("available families:", ", ".join(sorted(FAMILIES)))
for name in ("fibonacci-numbers", "pell-numbers", "jacobsthal-numbers"):
    fam = get_family(name)
    print(f"{name}:", [str(family_value(fam, n)) for n in range(8)])
fam = get_family("chebyshev-U")
print("chebyshev-U:", [str(family_value(fam, n)) for n in range(5)])
fam = get_family("fibonacci-p-poly")
print("fibonacci-p-poly (p=2):", [str(family_value(fam, n, p=2)) for n in range(7)])
print()

# Five-way agreement: recurrence vs all four matrix routes.
for p in (1, 3, 5):
    report = cross_check(p, 12)
    routes = ", ".join(report.values)
    print(f"p={p}, n=12: all_equal={report.all_equal} across {routes}")
    print("  value:", report.values["recurrence"])
