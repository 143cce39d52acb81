"""Dressed frame of the exciton-biexciton ladder under a single Gaussian pulse.

Shows the dressed energies and the second-pulse coupling factors at a few
times, then the dressed occupations at the end of the two prepared
scenarios (exciton and biexciton targets).
"""
import numpy as np

from twocolor import DressedFrame3LS, couplings_3ls, dressed_frames_3ls, project_3ls, propagate, scenario

cfg = scenario("fig4")
times = np.array([-9.0, -6.0, -3.0, 0.0])
energies, rows = dressed_frames_3ls(cfg, times)
o12, o13, o23 = couplings_3ls(DressedFrame3LS(energies, rows))
print("   t     E1      E2      E3     Om12    Om13    Om23")
for i, t in enumerate(times):
    print(f"{t:5.1f} {energies[i, 0]:7.3f} {energies[i, 1]:7.3f} {energies[i, 2]:7.3f} "
          f"{o12[i]:7.3f} {o13[i]:7.3f} {o23[i]:7.3f}")

for name, label in (("fig5", "exciton"), ("fig6", "biexciton")):
    c = scenario(name)
    traj = propagate(c)
    final = project_3ls(traj, c).occupations[-1]
    print(f"{label:9s} target: bare final {np.round(traj.occupations[-1], 4)}, dressed final {np.round(final, 4)}")
