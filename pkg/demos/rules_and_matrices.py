"""
From a succession rule to its production matrix
===============================================

A weighted succession rule is written in a small text format, compiled to
a production matrix, and the generating tree is grown level by level to
confirm that both give the same sequence.
"""

from parametric_eco import parse_rule, rule_to_matrix, sequence, simulate_levels, truncate
from parametric_eco.rules import print_rule

text = """
# the Fibonacci polynomials
axiom (1; 1)
rule (1) -> (2; 1)
rule (2) -> (1; x) (2; 1)
"""
rule = parse_rule(text)
print(print_rule(rule))

P = rule_to_matrix(rule, 2)
print("matrix:", [[str(e) for e in row] for row in truncate(P, 2)])
print("u P^n e:", [str(p) for p in sequence(P, 6)])
print("tree   :", [str(p) for p in simulate_levels(rule, 6)])

# the Dyck path rule: labels count excursions, weights record x_m, y_k
from parametric_eco import builtin_rule

dyck = builtin_rule("dyck-main")
M = rule_to_matrix(dyck, 4)
for row in truncate(M, 4):
    print("  ".join(f"{str(e):>6}" for e in row))

# a broken rule reports where it went wrong
from parametric_eco.rules import RuleSyntaxError

try:
    parse_rule("axiom (1; 1)\nrule (1) -> (2 1)\n")
except RuleSyntaxError as exc:
    print("error:", exc)
