"""Expected H1, H2, H3 for the finite irreducible families (published table)."""


def _a(n):
    h2 = "0" if n <= 2 else "Z2"
    if n == 1:
        h3 = "Z2"
    elif n == 2:
        h3 = "Z2 + Z3"
    elif n in (3, 4):
        h3 = "Z2 + Z3 + Z4"
    else:
        h3 = "Z2^2 + Z3 + Z4"
    return ("Z2", h2, h3)


def _b(n):
    h2 = {2: "Z2", 3: "Z2^2"}.get(n, "Z2^3")
    h3 = {2: "Z2^2 + Z4", 3: "Z2^4 + Z3 + Z4", 4: "Z2^5 + Z3 + Z4^2",
          5: "Z2^6 + Z3 + Z4^2"}.get(n, "Z2^7 + Z3 + Z4^2")
    return ("Z2^2", h2, h3)


def _d(n):
    h3 = {4: "Z2^2 + Z3 + Z4^3", 5: "Z2^2 + Z3 + Z4^2"}.get(n, "Z2^3 + Z3 + Z4^2")
    return ("Z2", "Z2^2", h3)


def _i2(p):
    if p % 2:
        return ("Z2", "0", f"Z2 + Z{p}")
    return ("Z2^2", "Z2", f"Z2^2 + Z{p}")


GOLDEN = {}
for n in range(1, 9):
    GOLDEN[f"A{n}"] = _a(n)
for n in range(2, 9):
    GOLDEN[f"B{n}"] = _b(n)
for n in range(4, 9):
    GOLDEN[f"D{n}"] = _d(n)
for p in range(5, 13):
    GOLDEN[f"I2({p})"] = _i2(p)
GOLDEN.update({
    "F4": ("Z2^2", "Z2^2", "Z2^5 + Z3^2 + Z4"),
    "H3": ("Z2", "Z2", "Z2^3 + Z3 + Z5"),
    "H4": ("Z2", "Z2", "Z2^2 + Z3 + Z4 + Z5"),
    "E6": ("Z2", "Z2", "Z2^2 + Z3 + Z4"),
    "E7": ("Z2", "Z2", "Z2^2 + Z3 + Z4"),
    "E8": ("Z2", "Z2", "Z2^2 + Z3 + Z4"),
})
