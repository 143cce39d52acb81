"""Analytic second-pulse design versus the tabulated optimized values.

Prints the detuning table for |Delta_1| = 5 meV and a 4 meV plateau, the
required areas, and the final exciton occupation obtained when the
analytic numbers are used directly.
"""
from twocolor import Branch, RunConfig, design_second_pulse, detuning_table, propagate
from twocolor.pulses import PulseSpec

table = detuning_table(5.0, 4.0)
print("Delta_2 (meV)        Delta_1 = -5   Delta_1 = +5")
for branch in Branch:
    print(f"omega_Delta {branch.value:9s}  {table[(-5.0, branch)]:12.4f} {table[(5.0, branch)]:13.4f}")

for d1 in (-5.0, 5.0):
    r = design_second_pulse(d1, 4.0)
    first = PulseSpec.rectangular(4.0, 40.0, 1.0, d1)
    cfg = RunConfig("two_level", first, PulseSpec.gaussian(r.area2, 4.0, r.delta2), t_start=-40.0, t_end=40.0)
    occ = propagate(cfg.system_config()).occupation(1)[-1]
    print(f"Delta_1 = {d1:+.0f}: Delta_2 = {r.delta2:.4f} meV, area = {r.area2:.3f} pi, final occ_x = {occ:.4f}")
