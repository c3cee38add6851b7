"""The verification suite: seeded random cases, shrinking, and oracles.

Each registered property runs on generated ideals.  A failing property
reports the seed of the failing case and a smaller configuration which
still fails, so the counterexample can be replayed.
"""

from polyideal import QQ
from polyideal.benchmarks import benchmark_ideal
from polyideal.verify import (
    PROPERTIES,
    GenConfig,
    Property,
    gen_ideal,
    gen_polynomial,
    loopback_oracle,
    oracle_compare,
    run_property,
)

cfg = GenConfig(seed=7)
print("a generated ideal:", ", ".join(map(str, gen_ideal(cfg))))

print("\nregistered properties, 30 cases each:")
for name in sorted(PROPERTIES):
    print("  ", run_property(name, cfg, 30))

print("\nover Q:")
print("  ", run_property("prop_passesSTest_buchberger", GenConfig(seed=7, field=QQ), 30))


def too_strong(cfg):
    # false in general: random polynomials have more than two terms
    return len(gen_polynomial(cfg)) <= 2


print("\na property that should fail:")
print("  ", run_property(Property("at_most_two_terms", too_strong), cfg, 50))

# the oracle protocol, pointed back at this package's own command line
report = oracle_compare(benchmark_ideal("I2", "grevlex"), loopback_oracle("f4"))
print("\ncyclic-4 against the loopback oracle:", "agree" if report.agree else "disagree")
