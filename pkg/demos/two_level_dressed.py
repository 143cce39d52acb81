"""Two-level inversion seen from the dressed frame of the first pulse.

A 4 meV rectangular pulse at -5 meV dresses the emitter; a Gaussian pulse
at -11.46 meV then drives the transition between the dressed states.
Run with ``--plot`` to write two_level_dressed.png.
"""
import numpy as np

from _plotting import pyplot
from twocolor import exciton_decomposition, project_tls, propagate, scenario

cfg = scenario("fig2")
traj = propagate(cfg)
dressed = project_tls(traj, cfg)
pop, coh = exciton_decomposition(dressed)

print(f"splitting on the plateau: {np.ptp(dressed.energies[traj.times.size // 2]):.4f} meV")
for t in (-30.0, -12.0, 0.0, 12.0, 40.0):
    i = np.searchsorted(traj.times, t)
    print(f"t = {t:6.1f} ps  occ_x = {traj.occupation(1)[i]:.4f}  "
          f"psi+ = {dressed.occupations[i, 1]:.4f}  population part = {pop[i]:.4f}  "
          f"coherence part = {coh[i]:+.4f}")

plt = pyplot()
if plt:
    fig, (a, b) = plt.subplots(2, 1, sharex=True, figsize=(6, 6))
    a.plot(traj.times, traj.occupation(1), label="|x>")
    a.plot(traj.times, pop, "--", label="population part")
    a.plot(traj.times, coh, ":", label="coherence part")
    a.legend()
    b.plot(traj.times, dressed.occupations[:, 1], label="psi+")
    b.plot(traj.times, dressed.occupations[:, 0], label="psi-")
    b.set_xlabel("t (ps)")
    b.legend()
    fig.savefig("two_level_dressed.png", dpi=120)
