"""Regenerate the finite-semiring fixture corpus under src/tropalg/fixtures/semirings."""

from pathlib import Path

from tropalg.rings import IntegersModN, parse_ring
from tropalg.semiring import BOOLEAN, FgId, FiniteSemiring, chain, product_semiring

OUT = Path(__file__).resolve().parents[1] / "src" / "tropalg" / "fixtures" / "semirings"


def ring_as_semiring(n):
    r = IntegersModN(n)
    return FiniteSemiring.from_operations(r.elements(), r.add, r.mul, 0, 1 % n, name=f"z{n}_ring")


def truncated_nat(cap=3):
    els = list(range(cap + 1))
    return FiniteSemiring.from_operations(els, lambda a, b: min(a + b, cap),
                                          lambda a, b: min(a * b, cap), 0, 1,
                                          name=f"nat_trunc{cap}")


def maxplus_capped(cap=2):
    # {-inf, 0, 1, ..., cap}: max as sum, addition capped at ``cap`` as product
    ninf = None
    els = [ninf] + list(range(cap + 1))

    def mul(a, b):
        if a is None or b is None:
            return None
        return min(a + b, cap)

    def add(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return max(a, b)

    return FiniteSemiring.from_operations(els, add, mul, ninf, 0,
                                          label=lambda x: "-inf" if x is None else str(x),
                                          name="maxplus_capped")


def zero_semiring():
    return FiniteSemiring(["0"], [["0"]], [["0"]], "0", "0", name="zero")


def corpus():
    yield "boolean", BOOLEAN
    yield "chain3", chain(3)
    yield "chain4", chain(4)
    yield "chain5", chain(5)
    yield "diamond", product_semiring(BOOLEAN, BOOLEAN, name="diamond")
    yield "boolean_x_chain3", product_semiring(BOOLEAN, chain(3), name="boolean_x_chain3")
    yield "maxplus_capped", maxplus_capped()
    yield "nat_trunc3", truncated_nat()
    for n in (2, 3, 4):
        yield f"z{n}_ring", ring_as_semiring(n)
    for n in (4, 6, 8, 12):
        yield f"fgid_z{n}", FgId(IntegersModN(n)).to_finite()
    yield "fgid_f2x_x2x", FgId(parse_ring("F2[x]/(x^2+x)")).to_finite()
    yield "zero", zero_semiring()


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for name, s in corpus():
        s.name = name
        (OUT / f"{name}.json").write_text(s.to_json() + "\n")
        print(name, len(s))
