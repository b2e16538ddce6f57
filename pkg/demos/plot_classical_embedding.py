"""
Classical probability inside quantum probability
================================================

A finite probability space becomes a diagonal state, and a random variable
becomes a diagonal observable with the same spectrum and the same mean.
"""

from qprob import (
    FiniteProbabilitySpace,
    RandomVariable,
    canonical_form,
    embed_classical,
    evaluate,
    spec,
    spectral_resolution,
)
from qprob.classical import expected_value

die = FiniteProbabilitySpace.uniform(["1", "2", "3", "4", "5", "6"])
parity = RandomVariable([1, 0, 1, 0, 1, 0])  # odd faces score 1

print("E[X] classical :", expected_value(die, parity))

m, rho = embed_classical(die, parity)
print("rho(M_X)       :", evaluate(rho, m).real)

# X = sum_x x 1_{X = x}, the classical counterpart of A = sum lambda E
cf = canonical_form(parity)
for value, event in cf.terms:
    print(f"  X = {value:g} on outcomes {sorted(die.labels[i] for i in event)}")
print("spec(X)             :", spec(parity))
print("spectrum of diag(X) :", spectral_resolution(m).values.tolist())
